"""Line-oriented text format for quasi-Hopf data.

    # comments start with '#'
    [field]
    p = 3
    [preset]
    name = kalpha_phi
    params = 1

or an explicit structure

    [algebra]
    dim = 2
    labels = 1 x
    sc 0 0 0 1          # e_0 e_0 = 1 * e_0
    comul 1 1 0 1       # Δ(e_1) contains 1 * e_1⊗e_0
    counit 1 0
    [associator]
    0 0 0 1             # i j k value
    [rmatrix]
    0 0 1               # i j value

Unlisted structure constants are zero.  The unit defaults to e_0 and may be
given as ``unit v0 v1 ...``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dfield

import numpy as np

from .algebra import Algebra, TensorElement
from .catalog import PRESETS, PresetSpec, instantiate
from .errors import InputError, SpecError
from .field import is_prime
from .hopf import HopfStructure, check_bialgebra
from .quasi import QuasiData

SECTIONS = ("field", "preset", "algebra", "associator", "rmatrix")


@dataclass
class SpecDocument:
    p: int
    preset: PresetSpec | None = None
    dim: int | None = None
    labels: tuple | None = None
    unit: tuple | None = None
    counit: tuple | None = None
    sc: tuple = ()
    comul: tuple = ()
    associator: tuple | None = None
    rmatrix: tuple | None = None
    # source locations for semantic diagnostics; not part of equality
    where: dict = dfield(default_factory=dict, compare=False, repr=False)

    def loc(self, key):
        return self.where.get(key, (1, 1))


def _ints(tokens, line, col0, raw):
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise SpecError(f"expected an integer, got {tok!r}", line, raw.index(tok, col0 - 1) + 1) from None
    return out


def parse_spec(text: str) -> SpecDocument:
    section = None
    seen = set()
    vals: dict = {"sc": [], "comul": []}
    where: dict = {}
    p = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        s = line.strip()
        if s.startswith("["):
            if not s.endswith("]"):
                raise SpecError("unterminated section header", lineno, col)
            name = s[1:-1].strip()
            if name not in SECTIONS:
                raise SpecError(f"unknown section [{name}]", lineno, col + 1)
            if name in seen:
                raise SpecError(f"duplicate section [{name}]", lineno, col + 1)
            seen.add(name)
            section = name
            where[name] = (lineno, col)
            if name in ("associator", "rmatrix"):
                vals[name] = []
            continue
        if section is None:
            raise SpecError("content before the first section header", lineno, col)
        if section in ("field", "preset") or (section == "algebra" and "=" in s):
            if "=" not in s:
                raise SpecError("expected key = value", lineno, col)
            key, _, value = s.partition("=")
            key, value = key.strip(), value.strip()
            eq = raw.index("=")
            vcol = (raw.index(value, eq) if value else eq + 1) + 1
            where[f"{section}.{key}"] = (lineno, vcol)
            if section == "field":
                if key != "p":
                    raise SpecError(f"unknown key {key!r} in [field]", lineno, col)
                (p,) = _ints([value], lineno, vcol, raw) if value else (None,)
                if p is None:
                    raise SpecError("missing value for p", lineno, vcol)
            elif section == "preset":
                if key == "name":
                    vals["preset_name"] = value
                elif key == "params":
                    vals["preset_params"] = tuple(_ints(value.split(), lineno, vcol, raw))
                else:
                    raise SpecError(f"unknown key {key!r} in [preset]", lineno, col)
            else:
                if key == "dim":
                    (vals["dim"],) = _ints([value], lineno, vcol, raw)
                elif key == "labels":
                    vals["labels"] = tuple(value.split())
                else:
                    raise SpecError(f"unknown key {key!r} in [algebra]", lineno, col)
            continue
        toks = s.split()
        if section == "algebra":
            head, rest = toks[0], toks[1:]
            nums = _ints(rest, lineno, col + len(head), raw)
            if head in ("sc", "comul"):
                if len(nums) != 4:
                    raise SpecError(f"{head} takes i j k value", lineno, col)
                vals[head].append(tuple(nums))
                where.setdefault(f"{head}.entries", []).append((lineno, col))
            elif head in ("unit", "counit"):
                vals[head] = tuple(nums)
                where[f"algebra.{head}"] = (lineno, col)
            else:
                raise SpecError(f"unknown directive {head!r} in [algebra]", lineno, col)
        else:
            arity = 3 if section == "associator" else 2
            nums = _ints(toks, lineno, col, raw)
            if len(nums) != arity + 1:
                raise SpecError(f"[{section}] entries take {arity} indices and a value", lineno, col)
            vals[section].append(tuple(nums))
            where.setdefault(f"{section}.entries", []).append((lineno, col))
    if p is None:
        raise SpecError("missing [field] p", 1, 1)
    if not is_prime(p):
        raise SpecError(f"characteristic must be prime, got {p}", *where["field.p"])
    if "preset" in seen and "algebra" in seen:
        raise SpecError("give either [preset] or [algebra], not both", *where["algebra"])
    if "preset" not in seen and "algebra" not in seen:
        raise SpecError("missing [preset] or [algebra] section", 1, 1)
    doc = SpecDocument(p=p, where=where)
    if "preset" in seen:
        name = vals.get("preset_name")
        if name is None:
            raise SpecError("[preset] needs name", *where["preset"])
        if name not in PRESETS:
            raise SpecError(f"unknown preset {name!r}", *where["preset.name"])
        doc.preset = PresetSpec(name, vals.get("preset_params", ()))
    else:
        if "dim" not in vals:
            raise SpecError("[algebra] needs dim", *where["algebra"])
        doc.dim = vals["dim"]
        doc.labels = vals.get("labels")
        doc.unit = vals.get("unit")
        doc.counit = vals.get("counit")
        doc.sc = tuple(vals["sc"])
        doc.comul = tuple(vals["comul"])
        _check_indices(doc)
    if "associator" in vals:
        doc.associator = tuple(vals["associator"])
    if "rmatrix" in vals:
        doc.rmatrix = tuple(vals["rmatrix"])
    return doc


def _check_indices(doc: SpecDocument):
    d = doc.dim
    if d < 1:
        raise SpecError("dim must be positive", *doc.loc("algebra.dim"))
    if doc.labels is not None and len(doc.labels) != d:
        raise SpecError(f"expected {d} labels, got {len(doc.labels)}", *doc.loc("algebra.labels"))
    for key in ("unit", "counit"):
        v = getattr(doc, key)
        if v is not None and len(v) != d:
            raise SpecError(f"{key} needs {d} entries, got {len(v)}", *doc.loc(f"algebra.{key}"))
    for key in ("sc", "comul"):
        for n, entry in enumerate(getattr(doc, key)):
            if any(not 0 <= i < d for i in entry[:3]):
                raise SpecError(f"index out of range 0..{d - 1} in {key} entry", *doc.where[f"{key}.entries"][n])


def _dense(entries, shape, p):
    out = np.zeros(shape, dtype=np.int64)
    for e in entries:
        out[tuple(e[:-1])] += e[-1]
    return out % p


def build(doc: SpecDocument) -> QuasiData:
    """Instantiate the document; explicit structures are checked as bialgebras."""
    p = doc.p
    if doc.preset is not None:
        try:
            q = instantiate(p, doc.preset)
        except InputError as exc:
            raise SpecError(str(exc), *doc.loc("preset.params" if "preset.params" in doc.where else "preset")) from None
    else:
        d = doc.dim
        unit = np.zeros(d, dtype=np.int64)
        unit[0] = 1
        if doc.unit is not None:
            unit = np.array(doc.unit)
        if doc.counit is None:
            raise SpecError("[algebra] needs counit", *doc.loc("algebra"))
        try:
            A = Algebra(p, _dense(doc.sc, (d, d, d), p), unit, np.array(doc.counit), labels=doc.labels, name="spec")
        except InputError as exc:
            raise SpecError(f"not an augmented algebra: {exc}", *doc.loc("algebra")) from None
        h = HopfStructure(A, _dense(doc.comul, (d, d, d), p), name="spec")
        rep = check_bialgebra(h)
        if not rep.passed:
            raise SpecError(f"not a bialgebra: {', '.join(rep.failures())} fails", *doc.loc("algebra"))
        q = QuasiData(h)
    d = q.algebra.dim
    for key, arity in (("associator", 3), ("rmatrix", 2)):
        entries = getattr(doc, key)
        if entries is None:
            continue
        for n, e in enumerate(entries):
            if any(not 0 <= i < d for i in e[:arity]):
                raise SpecError(f"index out of range 0..{d - 1} in [{key}]", *doc.where[f"{key}.entries"][n])
        t = TensorElement(q.algebra, _dense(entries, (d,) * arity, p))
        q = QuasiData(q.hopf, t if key == "associator" else q.associator,
                      t if key == "rmatrix" else q.r_matrix)
    return q


def serialize_spec(doc: SpecDocument) -> str:
    lines = ["[field]", f"p = {doc.p}"]
    if doc.preset is not None:
        lines += ["[preset]", f"name = {doc.preset.name}"]
        if doc.preset.params:
            lines.append("params = " + " ".join(str(int(x)) for x in doc.preset.params))
    else:
        lines += ["[algebra]", f"dim = {doc.dim}"]
        if doc.labels is not None:
            lines.append("labels = " + " ".join(doc.labels))
        if doc.unit is not None:
            lines.append("unit " + " ".join(map(str, doc.unit)))
        if doc.counit is not None:
            lines.append("counit " + " ".join(map(str, doc.counit)))
        lines += ["sc " + " ".join(map(str, e)) for e in doc.sc]
        lines += ["comul " + " ".join(map(str, e)) for e in doc.comul]
    for key in ("associator", "rmatrix"):
        entries = getattr(doc, key)
        if entries is not None:
            lines.append(f"[{key}]")
            lines += [" ".join(map(str, e)) for e in entries]
    return "\n".join(lines) + "\n"


def document_from_quasi(q: QuasiData) -> SpecDocument:
    """Explicit document describing q (sparse entries in index order)."""
    A, h = q.algebra, q.hopf

    def entries(arr):
        return tuple(tuple(int(i) for i in idx) + (int(arr[tuple(idx)]),) for idx in np.argwhere(arr))

    doc = SpecDocument(p=A.p, dim=A.dim, labels=tuple(A.labels), counit=tuple(int(v) for v in A.counit),
                       sc=entries(A.mult), comul=entries(h.comul))
    if not np.array_equal(A.unit, np.eye(A.dim, dtype=np.int64)[0]):
        doc.unit = tuple(int(v) for v in A.unit)
    if q.associator != A.one(3):
        doc.associator = entries(q.associator.coords)
    if q.r_matrix is not None:
        doc.rmatrix = entries(q.r_matrix.coords)
    return doc
