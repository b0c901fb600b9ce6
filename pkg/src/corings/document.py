"""JSON structure documents: parsing, reference resolution, verification and canonical output.

A document names its modules and maps and then bundles them into typed
structures::

    {"format": "corings-structure", "version": 1,
     "ring": {"mod": "4"},
     "modules": {"H": {"rank": 2, "relations": []}},
     "maps": {"mu": {"domain": ["H", "H"], "codomain": ["H"], "matrix": [["1", "0", ...]]}},
     "structures": {"kH": {"type": "algebra", "carrier": "H", "mult": "mu", "unit": ["1", "0"]}}}

A domain or codomain is a list of module names read as their tensor product.
Integers may be JSON numbers or decimal strings; output always uses strings.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

import numpy as np

from .algebra import (Algebra, Bialgebra, Coalgebra, ComoduleAlgebra, ModuleCoalgebra,
                      RightModule, verify_algebra, verify_bialgebra, verify_coalgebra,
                      verify_right_module)
from .comodule import Comodule, MeasuringPairing, verify_comodule
from .coring import ACoring, TensorOverA, coring_from_coalgebra, coseparability_check, verify_coring
from .entwine import (LR, RR, AltDKStructure, ComoduleCoalgebra, DKStructure, Entwining,
                      ModuleAlgebra, left_right_dk, verify_entwining)
from .errors import CoringsError, ParseError, UnresolvedReference, VerificationFailed
from .fpmod import FPModule, ModuleMap, TensorModule, tensor
from .report import Report
from .zn import RingContext, ZnMatrix

FORMAT = "corings-structure"
VERSION = 1

KINDS = ("algebra", "coalgebra", "bialgebra", "coring", "pairing", "entwining", "dk", "alt_dk",
         "comodule", "module", "cointegral")

# field name -> what it refers to
_FIELDS = {
    "algebra": {"carrier": "module", "mult": "map", "unit": "vector?"},
    "coalgebra": {"carrier": "module", "comult": "map", "counit": "map"},
    "bialgebra": {"algebra": "algebra", "coalgebra": "coalgebra"},
    "coring": {"base": "algebra", "carrier": "module", "left_action": "map",
               "right_action": "map", "comult": "map", "counit": "map"},
    "pairing": {"acting": "algebra", "coring": "coring|coalgebra", "functionals": "matrices",
                "base_map": "map?"},
    "entwining": {"algebra": "algebra", "coalgebra": "coalgebra", "psi": "map", "handed": "handed?"},
    "dk": {"bialgebra": "bialgebra", "algebra": "algebra", "coaction": "map",
           "coalgebra": "coalgebra", "action": "map", "handed": "handed?"},
    "alt_dk": {"bialgebra": "bialgebra", "algebra": "algebra", "action": "map",
               "coalgebra": "coalgebra", "coaction": "map"},
    "comodule": {"coring": "coring|coalgebra", "carrier": "module", "coaction": "map",
                 "right_action": "map?"},
    "module": {"algebra": "algebra", "carrier": "module", "action": "map"},
    "cointegral": {"coring": "coring|coalgebra", "gamma": "map"},
}


def _locate(text: Optional[str], path: tuple) -> tuple[Optional[int], Optional[int]]:
    """Line and column of the last key of ``path`` found in order in the raw text."""
    if text is None:
        return None, None
    pos, found = 0, False
    for key in path:
        if not isinstance(key, str):
            continue
        m = re.compile(r'"%s"\s*:' % re.escape(key)).search(text, pos)
        if m is None:
            break
        pos, found = m.start(), True
    if not found:
        return None, None
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _num(x) -> str:
    return str(int(x))


@dataclass
class StructureDocument:
    """A parsed document: canonical data plus the objects it defines."""

    data: dict
    ring: RingContext
    modules: dict[str, FPModule]
    maps: dict[str, ModuleMap]
    structures: dict[str, Any]
    kinds: dict[str, str]
    reports: dict[str, Report] = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.data.get("name", "")

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, sort_keys=True) + "\n"

    def of_kind(self, *kinds: str) -> dict[str, Any]:
        return {k: v for k, v in self.structures.items() if self.kinds[k] in kinds}

    def pick(self, *kinds: str, name: Optional[str] = None):
        """The structure called ``name``, or the only one of the given kinds."""
        if name is not None:
            if name not in self.structures:
                raise UnresolvedReference(f"no structure named {name!r}")
            if self.kinds[name] not in kinds:
                raise UnresolvedReference(f"{name!r} is a {self.kinds[name]}, expected {' or '.join(kinds)}")
            return name, self.structures[name]
        cands = self.of_kind(*kinds)
        if len(cands) != 1:
            # prefer the structure named after the document
            if self.name in cands:
                return self.name, cands[self.name]
            what = "no" if not cands else "several"
            raise UnresolvedReference(f"{what} {' or '.join(kinds)} structures; name one with #NAME")
        return next(iter(cands.items()))

    def verification(self) -> Report:
        rep = Report(f"document {self.name}".strip())
        for sname in sorted(self.reports):
            rep.extend(self.reports[sname], f"{sname}: ")
        return rep


class _Loader:
    def __init__(self, data: dict, text: Optional[str]):
        self.text = text
        self.data = data

    def fail(self, msg: str, *path):
        line, col = _locate(self.text, path)
        raise ParseError(msg, line, col)

    def integer(self, x, *path) -> int:
        if isinstance(x, bool):
            self.fail(f"expected an integer, got {x!r}", *path)
        if isinstance(x, int):
            return x
        if isinstance(x, str) and re.fullmatch(r"-?\d+", x.strip()):
            return int(x)
        self.fail(f"expected an integer, got {x!r}", *path)

    def vector(self, v, *path) -> list[int]:
        if not isinstance(v, list):
            self.fail("expected a list of integers", *path)
        return [self.integer(x, *path) for x in v]

    def matrix(self, rows, nrows: int, ncols: int, *path) -> ZnMatrix:
        if not isinstance(rows, list) or len(rows) != nrows:
            self.fail(f"expected {nrows} rows", *path)
        out = []
        for r in rows:
            vals = self.vector(r, *path)
            if len(vals) != ncols:
                self.fail(f"expected {ncols} entries per row, got {len(vals)}", *path)
            out.append(vals)
        if nrows == 0:
            return ZnMatrix.zero(self.ring, 0, ncols)
        return ZnMatrix.from_array(self.ring, np.asarray(out, dtype=object).reshape(nrows, ncols))

    def load(self) -> StructureDocument:
        d = self.data
        if not isinstance(d, dict):
            self.fail("a document must be a JSON object")
        if d.get("format", FORMAT) != FORMAT:
            self.fail(f"unknown format {d.get('format')!r}", "format")
        ver = self.integer(d.get("version", VERSION), "version")
        if ver != VERSION:
            self.fail(f"unsupported version {ver}", "version")
        ring = d.get("ring")
        if not isinstance(ring, dict) or "mod" not in ring:
            self.fail("missing ring.mod", "ring")
        n = self.integer(ring["mod"], "ring", "mod")
        if n < 2:
            self.fail(f"modulus must be at least 2, got {n}", "ring", "mod")
        self.ring = RingContext(n)
        self.modules: dict[str, FPModule] = {}
        mods = d.get("modules", {})
        if not isinstance(mods, dict):
            self.fail("modules must be an object", "modules")
        for name, entry in mods.items():
            self.modules[name] = self.module(name, entry)
        self.maps: dict[str, ModuleMap] = {}
        maps = d.get("maps", {})
        if not isinstance(maps, dict):
            self.fail("maps must be an object", "maps")
        for name, entry in maps.items():
            self.maps[name] = self.map(name, entry)
        self.entries = d.get("structures", {})
        if not isinstance(self.entries, dict):
            self.fail("structures must be an object", "structures")
        self.objs: dict[str, Any] = {}
        self.kinds: dict[str, str] = {}
        self.building: set[str] = set()
        for name in self.entries:
            self.structure(name)
        return StructureDocument(canonical(d, self), self.ring, self.modules, self.maps,
                                 self.objs, self.kinds)

    def module(self, name, entry) -> FPModule:
        if not isinstance(entry, dict) or "rank" not in entry:
            self.fail(f"module {name!r} needs a rank", "modules", name)
        rank = self.integer(entry["rank"], "modules", name, "rank")
        if rank < 0:
            self.fail("rank must be non-negative", "modules", name, "rank")
        rels = entry.get("relations", [])
        if not isinstance(rels, list):
            self.fail("relations must be a list of vectors", "modules", name, "relations")
        vecs = []
        for r in rels:
            v = self.vector(r, "modules", name, "relations")
            if len(v) != rank:
                self.fail(f"relator of length {len(v)} for rank {rank}", "modules", name, "relations")
            vecs.append(v)
        labels = entry.get("labels")
        if labels is not None and (not isinstance(labels, list) or len(labels) != rank):
            self.fail("one label per generator", "modules", name, "labels")
        return FPModule.from_relations(self.ring, rank, vecs, labels)

    def factors(self, names, *path) -> FPModule:
        if isinstance(names, str):
            names = [names]
        if not isinstance(names, list) or not names:
            self.fail("expected a non-empty list of module names", *path)
        out = None
        for nm in names:
            if nm not in self.modules:
                raise UnresolvedReference(f"{'.'.join(map(str, path))}: unknown module {nm!r}")
            out = self.modules[nm] if out is None else tensor(out, self.modules[nm])
        return out

    def map(self, name, entry) -> ModuleMap:
        if not isinstance(entry, dict):
            self.fail(f"map {name!r} must be an object", "maps", name)
        for key in ("domain", "codomain", "matrix"):
            if key not in entry:
                self.fail(f"map {name!r} lacks {key}", "maps", name)
        dom = self.factors(entry["domain"], "maps", name, "domain")
        cod = self.factors(entry["codomain"], "maps", name, "codomain")
        mat = self.matrix(entry["matrix"], cod.rank, dom.rank, "maps", name, "matrix")
        try:
            return ModuleMap(dom, cod, mat)
        except CoringsError as e:
            self.fail(f"map {name!r}: {e}", "maps", name)

    def ref(self, sname, entry, key, want):
        optional = want.endswith("?")
        want = want.rstrip("?")
        if key not in entry:
            if optional:
                return None
            self.fail(f"structure {sname!r} lacks {key!r}", "structures", sname)
        val = entry[key]
        path = ("structures", sname, key)
        if want == "module":
            if val not in self.modules:
                raise UnresolvedReference(f"{sname}.{key}: unknown module {val!r}")
            return self.modules[val]
        if want == "map":
            if val not in self.maps:
                raise UnresolvedReference(f"{sname}.{key}: unknown map {val!r}")
            return self.maps[val]
        if want == "vector":
            return None if val is None else self.vector(val, *path)
        if want == "handed":
            if val not in (RR, LR):
                self.fail(f"handed must be {RR!r} or {LR!r}", *path)
            return val
        if want == "matrices":
            if not isinstance(val, list):
                self.fail("expected a list of matrices", *path)
            return [self.matrix(m, len(m) if isinstance(m, list) else -1,
                                len(m[0]) if isinstance(m, list) and m else 0, *path) for m in val]
        kinds = want.split("|")
        if not isinstance(val, str) or val not in self.entries:
            raise UnresolvedReference(f"{sname}.{key}: unknown structure {val!r}")
        obj = self.structure(val)
        if self.kinds[val] not in kinds:
            self.fail(f"{sname}.{key} must be a {want.replace('|', ' or ')}, not a {self.kinds[val]}", *path)
        return obj

    def structure(self, name):
        if name in self.objs:
            return self.objs[name]
        if name in self.building:
            self.fail(f"cyclic reference through {name!r}", "structures", name)
        entry = self.entries[name]
        if not isinstance(entry, dict) or entry.get("type") not in KINDS:
            self.fail(f"structure {name!r} has unknown type {entry.get('type') if isinstance(entry, dict) else entry!r}",
                      "structures", name)
        kind = entry["type"]
        extra = set(entry) - set(_FIELDS[kind]) - {"type", "name"}
        if extra:
            self.fail(f"structure {name!r} has unknown fields {sorted(extra)}", "structures", name)
        self.building.add(name)
        f = {k: self.ref(name, entry, k, w) for k, w in _FIELDS[kind].items()}
        self.building.discard(name)
        try:
            obj = _build(kind, name, f)
        except CoringsError as e:
            if isinstance(e, (ParseError, UnresolvedReference)):
                raise
            self.fail(f"structure {name!r}: {e}", "structures", name)
        self.objs[name] = obj
        self.kinds[name] = kind
        return obj


def _as_coring(x) -> ACoring:
    return x if isinstance(x, ACoring) else coring_from_coalgebra(x)


def _build(kind: str, name: str, f: dict):
    if kind == "algebra":
        return Algebra(f["carrier"], f["mult"], f["unit"], name)
    if kind == "coalgebra":
        return Coalgebra(f["carrier"], f["comult"], f["counit"], name)
    if kind == "bialgebra":
        return Bialgebra(f["algebra"], f["coalgebra"], name)
    if kind == "coring":
        return ACoring(f["base"], f["carrier"], f["left_action"], f["right_action"],
                       f["comult"].matrix, f["counit"], name)
    if kind == "pairing":
        base = f["base_map"].matrix if f["base_map"] is not None else None
        return MeasuringPairing(f["acting"], _as_coring(f["coring"]), f["functionals"], base,
                                check=False, name=name)
    if kind == "entwining":
        return Entwining(f["algebra"], f["coalgebra"], f["psi"], f["handed"] or RR, name)
    if kind == "dk":
        H = f["bialgebra"]
        CA = ComoduleAlgebra(f["algebra"], H, f["coaction"], f["algebra"].name)
        if (f["handed"] or RR) == LR:
            return left_right_dk(H, CA, f["coalgebra"], f["action"], name)
        return DKStructure(H, CA, ModuleCoalgebra(f["coalgebra"], H, f["action"]), RR, name)
    if kind == "alt_dk":
        H = f["bialgebra"]
        return AltDKStructure(H, ModuleAlgebra(f["algebra"], H, f["action"].matrix, f["algebra"].name),
                              ComoduleCoalgebra(f["coalgebra"], H, f["coaction"].matrix,
                                                f["coalgebra"].name), name)
    if kind == "comodule":
        C = _as_coring(f["coring"])
        Mr = None
        if f["right_action"] is not None:
            Mr = RightModule(f["carrier"], C.base, f["right_action"], name)
        return Comodule(C, f["carrier"], f["coaction"].matrix, Mr, name)
    if kind == "module":
        return RightModule(f["carrier"], f["algebra"], f["action"], name)
    if kind == "cointegral":
        C = _as_coring(f["coring"])
        return (C, f["gamma"])
    raise AssertionError(kind)


def verify_structure(kind: str, obj) -> Report:
    """The verification report for one loaded structure."""
    if kind == "algebra":
        return verify_algebra(obj)
    if kind == "coalgebra":
        return verify_coalgebra(obj)
    if kind == "bialgebra":
        return verify_bialgebra(obj)
    if kind == "coring":
        return verify_coring(obj)
    if kind == "pairing":
        return obj.verification
    if kind == "entwining":
        return verify_entwining(obj)
    if kind in ("dk", "alt_dk"):
        return obj.verification
    if kind == "comodule":
        return verify_comodule(obj)
    if kind == "module":
        return verify_right_module(obj)
    if kind == "cointegral":
        C, gamma = obj
        return coseparability_check(C, gamma).report
    raise AssertionError(kind)


def canonical(d: dict, L: Optional[_Loader] = None) -> dict:
    """Normalized document data: decimal-string integers, fixed header."""
    def ints(x):
        if isinstance(x, list):
            return [ints(v) for v in x]
        if isinstance(x, bool) or x is None:
            return x
        if isinstance(x, (int, np.integer)):
            return _num(x)
        if isinstance(x, str) and re.fullmatch(r"-?\d+", x.strip()):
            return _num(int(x))
        return x

    out = {"format": FORMAT, "version": VERSION,
           "ring": {"mod": _num(int(d["ring"]["mod"]))}}
    for key in ("name", "description"):
        if key in d:
            out[key] = d[key]
    out["modules"] = {}
    for name, entry in d.get("modules", {}).items():
        m = {"rank": int(entry["rank"]), "relations": ints(entry.get("relations", []))}
        if entry.get("labels") is not None:
            m["labels"] = list(entry["labels"])
        out["modules"][name] = m
    out["maps"] = {}
    for name, entry in d.get("maps", {}).items():
        dom = entry["domain"] if isinstance(entry["domain"], list) else [entry["domain"]]
        cod = entry["codomain"] if isinstance(entry["codomain"], list) else [entry["codomain"]]
        out["maps"][name] = {"domain": dom, "codomain": cod, "matrix": ints(entry["matrix"])}
    out["structures"] = {}
    for name, entry in d.get("structures", {}).items():
        s = {}
        for k, v in entry.items():
            s[k] = ints(v) if k in ("unit", "functionals") else v
        out["structures"][name] = s
    return out


def parse(text: str, verify: bool = True) -> StructureDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    return from_data(data, verify, text)


def from_data(data: dict, verify: bool = True, text: Optional[str] = None) -> StructureDocument:
    doc = _Loader(data, text).load()
    for name, obj in doc.structures.items():
        doc.reports[name] = verify_structure(doc.kinds[name], obj)
    if verify:
        rep = doc.verification()
        if not rep.passed:
            raise VerificationFailed(
                "verification failed: " + ", ".join(c.name for c in rep.failures()), rep)
    return doc


def load(path, verify: bool = True) -> StructureDocument:
    return parse(Path(path).read_text(), verify)


def save(doc: StructureDocument, path) -> None:
    Path(path).write_text(doc.to_json())


# ---------------------------------------------------------------------------
# writing documents from objects


class DocBuilder:
    """Collects modules, maps and structures under readable names."""

    def __init__(self, ring: RingContext, name: str = "", description: str = ""):
        self.ring = ring
        self.name = name
        self.description = description
        self.modules: dict[str, dict] = {}
        self._module_names: dict[tuple, str] = {}
        self.maps: dict[str, dict] = {}
        self.structures: dict[str, dict] = {}
        self._done: dict[int, str] = {}

    def _fresh(self, table: dict, base: str) -> str:
        base = re.sub(r"[^A-Za-z0-9_.+-]", "_", base) or "x"
        if base not in table:
            return base
        k = 2
        while f"{base}{k}" in table:
            k += 1
        return f"{base}{k}"

    def module(self, M: FPModule, hint: str = "M") -> list[str]:
        """Factor names whose tensor product is M."""
        if isinstance(M, TensorOverA):
            return self.module(M.plain, hint)
        if isinstance(M, TensorModule):
            return self.module(M.left, hint) + self.module(M.right, hint)
        key = (M.rank, M.key())
        if key in self._module_names:
            return [self._module_names[key]]
        name = self._fresh(self.modules, hint)
        rels = M.relations
        entry = {"rank": M.rank, "relations": [[_num(x) for x in rels.column(j)] for j in range(rels.cols)
                                              if any(rels.column(j))]}
        if M.labels is not None:
            entry["labels"] = list(M.labels)
        self.modules[name] = entry
        self._module_names[key] = name
        return [name]

    def map(self, f, dom: FPModule, cod: FPModule, hint: str) -> str:
        mat = f.matrix if isinstance(f, ModuleMap) else f
        name = self._fresh(self.maps, hint)
        self.maps[name] = {"domain": self.module(dom, hint.split(".")[0]),
                           "codomain": self.module(cod, hint.split(".")[0]),
                           "matrix": [[_num(x) for x in row] for row in mat.tolist()]}
        return name

    def _claim(self, obj, name: str) -> str:
        n = self._fresh(self.structures, name)
        self._done[id(obj)] = n
        self.structures[n] = {}  # reserve the name while dependencies are written
        return n

    def algebra(self, A: Algebra, name: str = "A") -> str:
        if id(A) in self._done:
            return self._done[id(A)]
        n = self._claim(A, name)
        car = self._carrier(A.carrier, name)
        self.structures[n] = {"type": "algebra", "carrier": car,
                              "mult": self.map(A.mult, tensor(A.carrier, A.carrier), A.carrier, f"{n}.mult"),
                              "unit": None if A.unit is None else [_num(x) for x in A.unit.vector]}
        return n

    def _carrier(self, M: FPModule, hint: str) -> str:
        names = self.module(M, hint)
        if len(names) == 1:
            return names[0]
        car = self._fresh(self.modules, hint)
        rels = M.relations
        self.modules[car] = {"rank": M.rank, "relations": [
            [_num(x) for x in rels.column(j)] for j in range(rels.cols) if any(rels.column(j))]}
        self._module_names.setdefault((M.rank, M.key()), car)
        return car

    def coalgebra(self, C: Coalgebra, name: str = "C") -> str:
        if id(C) in self._done:
            return self._done[id(C)]
        n = self._claim(C, name)
        car = self._carrier(C.carrier, name)
        R = self._ground()
        self.structures[n] = {"type": "coalgebra", "carrier": car,
                              "comult": self.map(C.comult, C.carrier, tensor(C.carrier, C.carrier), f"{n}.comult"),
                              "counit": self.map(C.counit, C.carrier, R, f"{n}.counit")}
        return n

    def _ground(self) -> FPModule:
        from .fpmod import ground_module
        R = ground_module(self.ring)
        self.module(R, "R")
        return R

    def bialgebra(self, H: Bialgebra, name: str = "H") -> str:
        if id(H) in self._done:
            return self._done[id(H)]
        n = self._claim(H, name)
        a = self.algebra(H.algebra, f"{n}.alg")
        c = self.coalgebra(H.coalgebra, f"{n}.coalg")
        self.structures[n] = {"type": "bialgebra", "algebra": a, "coalgebra": c}
        return n

    def coring(self, C: ACoring, name: str = "coring") -> str:
        if id(C) in self._done:
            return self._done[id(C)]
        n = self._claim(C, name)
        A = C.base
        base = self.algebra(A, f"{n}.base")
        car = self._carrier(C.carrier, n)
        self.structures[n] = {
            "type": "coring", "base": base, "carrier": car,
            "left_action": self.map(C.left_action, tensor(A.carrier, C.carrier), C.carrier, f"{n}.left"),
            "right_action": self.map(C.right_action, tensor(C.carrier, A.carrier), C.carrier, f"{n}.right"),
            "comult": self.map(C.comult, C.carrier, tensor(C.carrier, C.carrier), f"{n}.comult"),
            "counit": self.map(C.counit, C.carrier, A.carrier, f"{n}.counit")}
        return n

    def pairing(self, P: MeasuringPairing, name: str = "pairing") -> str:
        n = self._claim(P, name)
        acting = self.algebra(P.acting, f"{n}.acting")
        cor = self.coring(P.coring, f"{n}.coring")
        entry = {"type": "pairing", "acting": acting, "coring": cor,
                "functionals": [[[_num(x) for x in row] for row in K.tolist()] for K in P.functionals]}
        if P.base_map is not None:
            entry["base_map"] = self.map(P.base_map, P.coring.base.carrier, P.acting.carrier, f"{n}.base")
        self.structures[n] = entry
        return n

    def entwining(self, E: Entwining, name: str = "entwining") -> str:
        n = self._claim(E, name)
        a = self.algebra(E.A, "A")
        c = self.coalgebra(E.C, "C")
        self.structures[n] = {"type": "entwining", "algebra": a, "coalgebra": c,
                              "psi": self.map(E.psi, E.psi.domain, E.psi.codomain, f"{n}.psi"),
                              "handed": E.handed}
        return n

    def dk(self, D: DKStructure, name: str = "dk") -> str:
        if D.handed != RR:
            raise CoringsError("left-right structures are written after transport; write the source data")
        n = self._claim(D, name)
        h = self.bialgebra(D.H, "H")
        a = self.algebra(D.A.algebra, "A")
        c = self.coalgebra(D.C.coalgebra, "C")
        self.structures[n] = {
            "type": "dk", "bialgebra": h, "algebra": a, "coalgebra": c, "handed": RR,
            "coaction": self.map(D.A.coaction, D.A.coaction.domain, D.A.coaction.codomain, f"{n}.coaction"),
            "action": self.map(D.C.action, D.C.action.domain, D.C.action.codomain, f"{n}.action")}
        return n

    def alt_dk(self, D: AltDKStructure, name: str = "alt_dk") -> str:
        n = self._claim(D, name)
        h = self.bialgebra(D.H, "H")
        A, C = D.A.algebra, D.C.coalgebra
        a = self.algebra(A, "A")
        c = self.coalgebra(C, "C")
        self.structures[n] = {
            "type": "alt_dk", "bialgebra": h, "algebra": a, "coalgebra": c,
            "action": self.map(D.A.action, tensor(A.carrier, D.H.carrier), A.carrier, f"{n}.action"),
            "coaction": self.map(D.C.coaction, C.carrier, tensor(C.carrier, D.H.carrier), f"{n}.coaction")}
        return n

    def comodule(self, M: Comodule, name: str = "comodule") -> str:
        n = self._claim(M, name)
        C = M.coring
        cor = self.coring(C, "coring")
        car = self._carrier(M.carrier, n)
        entry = {"type": "comodule", "coring": cor, "carrier": car,
                "coaction": self.map(M.coaction, M.carrier, tensor(M.carrier, C.carrier), f"{n}.coaction")}
        if not C.base_is_ground:
            entry["right_action"] = self.map(M.right_module.action, tensor(M.carrier, C.base.carrier),
                                            M.carrier, f"{n}.right")
        self.structures[n] = entry
        return n

    def module_structure(self, M: RightModule, name: str = "module") -> str:
        n = self._claim(M, name)
        alg = self.algebra(M.algebra, "A")
        car = self._carrier(M.carrier, n)
        self.structures[n] = {"type": "module", "algebra": alg, "carrier": car,
                              "action": self.map(M.action, tensor(M.carrier, M.algebra.carrier), M.carrier,
                                                 f"{n}.action")}
        return n

    def cointegral(self, C: ACoring, gamma, name: str = "cointegral") -> str:
        n = self._fresh(self.structures, name)
        cor = self.coring(C, "coring")
        G = gamma if isinstance(gamma, ZnMatrix) else ZnMatrix.from_rows(self.ring, gamma)
        self.structures[n] = {"type": "cointegral", "coring": cor,
                              "gamma": self.map(G, tensor(C.carrier, C.carrier), self._ground(), f"{n}.gamma")}
        return n

    def data(self) -> dict:
        d = {"format": FORMAT, "version": VERSION, "ring": {"mod": _num(self.ring.modulus)},
             "modules": self.modules, "maps": self.maps, "structures": self.structures}
        if self.name:
            d["name"] = self.name
        if self.description:
            d["description"] = self.description
        return canonical(d)

    def document(self, verify: bool = True) -> StructureDocument:
        data = self.data()
        return from_data(json.loads(json.dumps(data)), verify, json.dumps(data, indent=2, sort_keys=True))
