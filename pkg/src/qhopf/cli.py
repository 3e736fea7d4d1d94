"""Command-line front end.

    qhopf verify SPEC | --preset NAME [--params ...] -p P
    qhopf cohomology ... --degree N [--coeff additive|mult-brute]
    qhopf associator -p P --s S [--mu MU]
    qhopf trivialize ... [--rmatrix]
    qhopf demo {thm5_17,remark5_9,cor2_6,prop5_11}

Reports are key=value lines.  Exit codes: 0 all checks pass, 1 a check
failed, 2 input or usage error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import sys
from math import comb

import numpy as np

from . import field
from .algebra import permute_slots, tensor
from .catalog import (PRESETS, PresetSpec, associator_phi, cyclic_group_algebra, instantiate,
                      make_alpha, make_u_dual, minimality_check, scaling_automorphism, skew_twist)
from .cohomology import (DEFAULT_BUDGET, MultiplicativeCochain, additive_cohomology,
                         brute_force_h2_multiplicative, canonical_h3_basis, hopf_coboundary,
                         is_multiplicative_coboundary, multiplicative_coboundary, trivialize_associator)
from .errors import InputError, QHopfError, ResourceLimit, Unsupported
from .quasi import QuasiData, check_twist, trivialize_rmatrix, verify_quasi
from .report import Report
from .specfile import build, parse_spec
from .truncexp import trunc_exp, truncated_series

DEMOS = ("thm5_17", "remark5_9", "cor2_6", "prop5_11")
COR2_6_CASES = ((3, (1,)), (3, (1, 1)), (3, (2,)), (2, (1, 1, 1)))


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--json", action="store_true", help="emit the same keys as a JSON object")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("spec", nargs="?", help="spec file ('-' for stdin)")
    source.add_argument("--preset", choices=sorted(PRESETS))
    source.add_argument("--params", type=int, nargs="*", default=[])
    source.add_argument("-p", type=int, default=None)

    ap = argparse.ArgumentParser(prog="qhopf", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common, source], help="check the quasi-Hopf axioms")
    c = sub.add_parser("cohomology", parents=[common, source], help="cohomology dimensions")
    c.add_argument("--degree", type=int, action="append")
    c.add_argument("--coeff", choices=("additive", "mult-brute"), default="additive")
    a = sub.add_parser("associator", parents=[common], help="build and check Phi_s on O(alpha_p)")
    a.add_argument("-p", type=int, default=3)
    a.add_argument("--s", type=int, default=1)
    a.add_argument("--mu", type=int, default=None)
    t = sub.add_parser("trivialize", parents=[common, source], help="trivialize the associator or R-matrix")
    t.add_argument("--rmatrix", action="store_true")
    d = sub.add_parser("demo", parents=[common], help="worked examples")
    d.add_argument("name", choices=DEMOS)
    d.add_argument("-p", type=int, default=None)
    return ap


def _load(args) -> QuasiData:
    if args.spec is not None and args.preset is not None:
        raise InputError("give a spec file or --preset, not both")
    if args.spec is not None:
        text = sys.stdin.read() if args.spec == "-" else open(args.spec, encoding="utf-8").read()
        return build(parse_spec(text))
    if args.preset is None:
        raise InputError("no input: give a spec file or --preset")
    if args.p is None:
        raise InputError("--preset needs -p")
    field.check_prime(args.p)
    return instantiate(args.p, PresetSpec(args.preset, tuple(args.params)))


# commands --------------------------------------------------------------------

def cmd_verify(args, rep: Report):
    q = _load(args)
    rep.add("algebra", q.hopf.name)
    rep.add("p", q.algebra.p)
    rep.add("dim", q.algebra.dim)
    rep.add_axioms(verify_quasi(q))


def cmd_cohomology(args, rep: Report):
    q = _load(args)
    rep.add("algebra", q.hopf.name)
    rep.add("p", q.algebra.p)
    if args.coeff == "mult-brute":
        r = brute_force_h2_multiplicative(q.hopf, budget=args.budget)
        rep.add("cohomology.mult_h2.candidates", r["candidates"])
        rep.add("cohomology.mult_h2.cocycles", r["cocycles"])
        rep.add("cohomology.mult_h2.gauge_candidates", r["gauge_candidates"])
        rep.add("cohomology.mult_h2.coboundaries", r["distinct_coboundaries"])
        rep.add("cohomology.mult_h2.with_witness", r["cocycles_with_witness"])
        rep.add("cohomology.mult_h2.all_coboundaries", r["all_coboundaries"])
        return
    for n in args.degree or [1, 2, 3]:
        r = additive_cohomology(q.algebra, n, args.budget)
        key = f"cohomology.h{n}"
        rep.add(f"{key}.dim", r.dim)
        rep.add(f"{key}.cocycles", r.dim_cocycles)
        rep.add(f"{key}.coboundaries", r.dim_coboundaries)
        if r.representatives is not None and len(r.representatives) <= 20:
            for k, c in enumerate(r.representatives):
                rep.add(f"{key}.rep.{k}", _cochain_text(c))


def _cochain_text(c) -> str:
    return repr(c).split(": ", 1)[1].rstrip(")")


def cmd_associator(args, rep: Report):
    p = field.check_prime(args.p)
    h = make_alpha(p, 1)
    s = args.s % p
    phi = associator_phi(p, s, h)
    rep.add("associator.p", p)
    rep.add("associator.s", s)
    rep.add("associator.phi", phi)
    rep.add_axioms(verify_quasi(QuasiData(h, phi)))
    if args.mu is not None:
        S = scaling_automorphism(p, args.mu, h)
        image_s = s * pow(args.mu, p + 1, p) % p
        rep.add("associator.mu", args.mu % p)
        rep.add("associator.image_s", image_s)
        rep.check("check.scaling_automorphism", S.is_hopf_automorphism())
        rep.check("check.scaling_image", S(phi) == associator_phi(p, image_s, h))


def cmd_trivialize(args, rep: Report):
    q = _load(args)
    rep.add("algebra", q.hopf.name)
    if args.rmatrix:
        J = trivialize_rmatrix(q)
        R = q.r_matrix
        rep.add("trivialize.mode", "rmatrix")
        rep.add("trivialize.twist", J)
        rep.check("check.rmatrix_trivialized", permute_slots(J, (2, 1)).inverse() * R * J == q.algebra.one(2))
        return
    res = trivialize_associator(q, args.budget)
    rep.add("trivialize.mode", "associator")
    _report_trivialization(rep, "trivialize", res)


def _report_trivialization(rep, key, res):
    rep.add(f"{key}.result", "success" if res.success else "obstruction")
    rep.add(f"{key}.rounds", res.rounds)
    if res.success:
        rep.add(f"{key}.twist", res.twist)
        rep.add(f"{key}.final_associator", res.final_associator)
    else:
        rep.add(f"{key}.obstruction.degree", res.obstruction_degree)
        rep.add(f"{key}.obstruction.cochain", _cochain_text(res.obstruction))
        rep.add(f"{key}.obstruction.coords", res.class_coords)


# demos -----------------------------------------------------------------------

def demo_thm5_17(args, rep: Report):
    p = args.p or 3
    field.check_prime(p)
    h = make_alpha(p, 1)
    phi = associator_phi(p, 1, h)
    q = QuasiData(h, phi)
    rep.add("thm5_17.p", p)
    rep.add("thm5_17.associator", phi)
    rep.add_axioms(verify_quasi(q))
    cob = is_multiplicative_coboundary(MultiplicativeCochain(h, 3, phi), args.budget)
    rep.add("thm5_17.h3.dim", cob.cohomology.dim if cob.cohomology else 0)
    rep.add("thm5_17.coboundary", "present" if cob else "absent")
    rep.check("check.not_a_coboundary", not cob)
    rep.add("thm5_17.obstruction.coords", cob.class_coords)
    res = trivialize_associator(q, args.budget)
    _report_trivialization(rep, "thm5_17.trivialize", res)
    same = (not res.success and cob.class_coords is not None
            and np.array_equal(res.class_coords, cob.class_coords))
    rep.check("check.same_obstruction", same)
    # x -> mu x sends Phi_s to Phi_{s mu^{p+1}}
    for mu in range(1, p):
        S = scaling_automorphism(p, mu, h)
        image = mu ** (p + 1) % p
        rep.add(f"thm5_17.scaling.mu{mu}.image_s", image)
        rep.check(f"check.scaling.mu{mu}", S(phi) == associator_phi(p, image, h))


def demo_remark5_9(args, rep: Report):
    h = cyclic_group_algebra(2, 2)
    A = h.algebra
    g = A.gen("g")
    u = A.one() + g
    t = hopf_coboundary(u, h)
    Et = trunc_exp(t)
    Eu = truncated_series(u)
    dEu = multiplicative_coboundary(MultiplicativeCochain(h, 1, Eu)).value
    rep.add("remark5_9.p", 2)
    rep.add("remark5_9.algebra", h.name)
    rep.add("remark5_9.additive_coboundary", t)
    rep.check("check.additive_coboundary_is_square", t == tensor(u, u))
    rep.add("remark5_9.exp_of_coboundary", "1 + (1+g)⊗(1+g)")
    rep.add("remark5_9.exp_of_coboundary.basis", Et)
    rep.check("check.exp_of_coboundary", Et == A.one(2) + tensor(u, u))
    rep.add("remark5_9.exp_of_cochain", Eu)
    rep.add("remark5_9.coboundary_of_exp", dEu)
    rep.check("check.coboundary_of_exp_is_one", dEu == A.one(2))
    rep.add("remark5_9.verdict", "differ" if Et != dEu else "equal")
    rep.check("check.exp_does_not_commute_with_d", Et != dEu)


def demo_cor2_6(args, rep: Report):
    for p, rs in COR2_6_CASES:
        key = f"cor2_6.p{p}_r{'-'.join(map(str, rs))}"
        basis = canonical_h3_basis([(p, r) for r in rs])
        n = len(rs)
        R = basis[0].base
        coh = additive_cohomology(R, 3, args.budget)
        rep.add(f"{key}.count", len(basis))
        rep.add(f"{key}.expected_count", n * n + comb(n, 3))
        rep.add(f"{key}.h3.dim", coh.dim)
        coords = [coh.class_coordinates(b) for b in basis]
        rep.check(f"check.{key[7:]}.cocycles", all(c is not None for c in coords))
        ok = all(c is not None for c in coords) and field.rank(np.array(coords) % p, p) == len(basis)
        rep.check(f"check.{key[7:]}.independent", ok)
        rep.check(f"check.{key[7:]}.spans", len(basis) == coh.dim == n * n + comb(n, 3))


def demo_prop5_11(args, rep: Report):
    p = args.p or 3
    field.check_prime(p)
    if p == 2:
        raise Unsupported("the skew twist demo needs p odd")
    ud = make_u_dual(p, 2)
    s = np.array([[0, 1], [p - 1, 0]])
    J = skew_twist(ud, s)
    rep.add("prop5_11.p", p)
    rep.add("prop5_11.twist", J)
    rep.add_axioms(check_twist(ud, J))
    rep.check("check.minimal", minimality_check(ud, J))
    rep.check("check.unit_not_minimal", not minimality_check(ud, ud.algebra.one(2)))
    rng = np.random.default_rng(args.seed)
    rep.add("prop5_11.seed", args.seed)
    rep.add("prop5_11.trials", args.trials)
    agree = 0
    for _ in range(args.trials):
        a = rng.integers(0, p, size=(2, 2))
        s = np.triu(a, 1)
        s = (s - s.T) % p
        nondeg = field.rank(s, p) == 2
        agree += minimality_check(ud, skew_twist(ud, s)) == nondeg
    rep.add("prop5_11.agreements", agree)
    rep.check("check.minimality_matches_nondegeneracy", agree == args.trials)


def cmd_demo(args, rep: Report):
    {"thm5_17": demo_thm5_17, "remark5_9": demo_remark5_9,
     "cor2_6": demo_cor2_6, "prop5_11": demo_prop5_11}[args.name](args, rep)


COMMANDS = {"verify": cmd_verify, "cohomology": cmd_cohomology, "associator": cmd_associator,
            "trivialize": cmd_trivialize, "demo": cmd_demo}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rep = Report()
    code = 0
    try:
        COMMANDS[args.command](args, rep)
        code = 0 if rep.passed else 1
    except ResourceLimit as exc:
        rep.add("error", f"resource limit: {exc}")
        code = 3
    except (InputError, Unsupported, OSError) as exc:
        rep.add("error", str(exc))
        code = 2
    except QHopfError as exc:
        rep.add("error", str(exc))
        code = 1
    out.write(rep.json() if args.json else rep.text())
    if code >= 2:
        err.write(f"qhopf: {rep['error']}\n")
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
