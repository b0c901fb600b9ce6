"""Named example documents.

>>> sorted(EXAMPLES)[:3]
['alt-dk-matrix-c2-z4', 'canonical-c2-z4', 'canonical-c2-z6']
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import FiniteGroup, GSet, group_algebra, gset_coalgebra, matrix_coalgebra
from .comodule import Comodule
from .coring import coring_from_coalgebra
from .corpus import NON_ALPHA, PAIRINGS
from .document import DocBuilder, StructureDocument
from .entwine import (alt_matrix_example, doi_hc, gset_graded, hopf_modules, long_dimodules,
                      relative_hopf, yetter_drinfeld_c2)
from .errors import UnknownExample
from .zn import RingContext


@dataclass(frozen=True)
class Example:
    name: str
    kind: str
    description: str
    build: Callable[[DocBuilder], None]
    modulus: int


def _dk(fn, *args, **kw):
    def build(B: DocBuilder):
        B.dk(fn(*args, **kw), B.name)
    return build


def _bialgebra(n, G):
    def build(B: DocBuilder):
        B.bialgebra(group_algebra(RingContext(n), G), B.name)
    return build


def _coalgebra(fn):
    def build(B: DocBuilder):
        B.coalgebra(fn(), B.name)
    return build


def _pairing(fn):
    def build(B: DocBuilder):
        B.pairing(fn(), B.name)
    return build


def _regular_comodule(fn):
    def build(B: DocBuilder):
        C = coring_from_coalgebra(fn())
        B.comodule(Comodule.regular(C), B.name)
    return build


def _cointegral_c3(B: DocBuilder):
    C = coring_from_coalgebra(group_algebra(RingContext(4), FiniteGroup.cyclic(3)).coalgebra)
    B.cointegral(C, [[int(i == j) for i in range(3) for j in range(3)]], B.name)


def _alt(B: DocBuilder):
    B.alt_dk(alt_matrix_example(4), B.name)


def _gset_coalgebra(B: DocBuilder):
    B.coalgebra(gset_coalgebra(RingContext(4), GSet.regular(FiniteGroup.cyclic(2))).coalgebra, B.name)


_C2 = FiniteGroup.cyclic(2)
_ENTRIES = [
    Example("hopf-modules-c2-z4", "dk", "Hopf modules: (R[C2], R[C2], R[C2]) over Z/4",
            _dk(hopf_modules, 4), 4),
    Example("relative-hopf-c2-z4", "dk", "relative Hopf modules: dual numbers with x of degree g",
            _dk(relative_hopf, 4), 4),
    Example("doi-hc-c2-z4", "dk", "Doi-Hopf data: A = H = R[C2], C = R[X] with |X| = 3",
            _dk(doi_hc, 4), 4),
    Example("long-dimodule-min", "dk", "trivial structure with H = A = C = R over Z/4",
            _dk(long_dimodules, 4, minimal=True), 4),
    Example("long-dimodule-c2-z4", "dk", "trivial structure with H = R, A = C = R[C2]",
            _dk(long_dimodules, 4), 4),
    Example("gset-graded-c2-orbit1-z4", "dk", "(R[C2], graded dual numbers, R[X]) with |X| = 1",
            _dk(gset_graded, 4, 1), 4),
    Example("gset-graded-c2-orbit2-z4", "dk", "(R[C2], graded dual numbers, R[X]) with |X| = 2",
            _dk(gset_graded, 4, 2), 4),
    Example("gset-graded-c2-points3-z4", "dk", "(R[C2], graded dual numbers, R[X]) with |X| = 3",
            _dk(gset_graded, 4, 3), 4),
    Example("yetter-drinfeld-c2-z4", "dk", "Yetter-Drinfeld datum over R[C2] (x) R[C2]",
            _dk(yetter_drinfeld_c2, 4), 4),
    Example("alt-dk-matrix-c2-z4", "alt_dk", "R^C2 acted on by C2, M^c_2 graded by off-diagonality",
            _alt, 4),
    Example("group-algebra-c2-z4", "bialgebra", "R[C2] over Z/4", _bialgebra(4, _C2), 4),
    Example("group-algebra-c3-z3", "bialgebra", "R[C3] over GF(3)", _bialgebra(3, FiniteGroup.cyclic(3)), 3),
    Example("group-algebra-c2xc2-z2", "bialgebra", "R[C2 x C2] over GF(2)",
            _bialgebra(2, FiniteGroup.direct_product(_C2, _C2)), 2),
    Example("matrix-coalgebra-2-z6", "coalgebra", "M^c_2 over Z/6",
            _coalgebra(lambda: matrix_coalgebra(RingContext(6), 2)), 6),
    Example("matrix-coalgebra-3-z2", "coalgebra", "M^c_3 over GF(2)",
            _coalgebra(lambda: matrix_coalgebra(RingContext(2), 3)), 2),
    Example("gset-coalgebra-c2-regular-z4", "coalgebra", "R[C2] as a G-set coalgebra", _gset_coalgebra, 4),
    Example("regular-comodule-mc2-z3", "comodule", "M^c_2 over GF(3) as a comodule over itself",
            _regular_comodule(lambda: matrix_coalgebra(RingContext(3), 2)), 3),
    Example("cointegral-c3-z4", "cointegral", "R[C3] over Z/4 with the diagonal cointegral",
            _cointegral_c3, 4),
]
for _name, _fn in list(PAIRINGS.items()) + list(NON_ALPHA.items()):
    _n = int(_name.rsplit("-z", 1)[1])
    _what = {"canonical": "the canonical pairing (*C, C)", "product": "C* x R acting on R[C2]",
             "eps": "R acting on R[C2] through the counit only"}[_name.split("-")[0]]
    _ENTRIES.append(Example(_name, "pairing", f"{_what}, {_name}", _pairing(_fn), _n))

EXAMPLES: dict[str, Example] = {e.name: e for e in _ENTRIES}


def example_names() -> list[str]:
    return sorted(EXAMPLES)


def emit_example(name: str, verify: bool = True) -> StructureDocument:
    if name not in EXAMPLES:
        raise UnknownExample(f"unknown example {name!r}; available: {', '.join(example_names())}")
    ex = EXAMPLES[name]
    B = DocBuilder(RingContext(ex.modulus), ex.name, ex.description)
    ex.build(B)
    return B.document(verify)


__all__ = ["EXAMPLES", "Example", "emit_example", "example_names"]
