"""Quadratic duals, bar-complex Ext tables and the Koszul verdict pipeline."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .classify import InvalidShape, check_pre_koszul_free, check_shape, homogeneous_version
from .freealg import NcPoly, Word
from .linalg import Echelon, nullspace
from .presentation import Presentation
from .rewrite import (
    DEFAULT_BUDGET,
    NotHomogeneousQuadratic,
    RewriteSystem,
    certify_pbw_basis,
    hilbert_prefix,
    irreducible_words,
    normal_form,
    prepare,
)

DEFAULT_SIZE_CAP = 20000


class SizeCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class QuadraticData:
    """Relation space ``R`` inside the ``n**2``-dimensional degree-2 word space.

    Coordinates follow the lexicographic order of index pairs, so pair
    ``(r, s)`` sits at position ``(r - 1) * n + (s - 1)``.
    """

    n: int
    R_basis: Tuple[Tuple[Fraction, ...], ...]

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return [(r, s) for r in range(1, self.n + 1) for s in range(1, self.n + 1)]

    @classmethod
    def from_presentation(cls, p: Presentation) -> "QuadraticData":
        for r in p.relators:
            if not r.is_homogeneous(2):
                raise NotHomogeneousQuadratic(f"relator {r.format(p.gens)} is not homogeneous quadratic")
        ech = Echelon().extend(dict(r.items()) for r in p.relators)
        data = cls(p.n, ())
        rows = tuple(tuple(row.get(w, Fraction(0)) for w in data.pairs) for row in ech.basis())
        return cls(p.n, rows)

    def relators(self) -> List[NcPoly]:
        pairs = self.pairs
        return [NcPoly({pairs[k]: c for k, c in enumerate(v) if c}) for v in self.R_basis]

    def presentation(self, gens: Sequence[str], name: str) -> Presentation:
        return Presentation(name, tuple(gens), tuple(self.relators()))


def quadratic_dual(q: QuadraticData) -> QuadraticData:
    """Annihilator of ``R`` under the pairing of ``x_r x_s`` with ``x*_r x*_s``."""
    cols = list(range(q.n * q.n))
    rows = [{k: c for k, c in enumerate(v) if c} for v in q.R_basis]
    perp = nullspace(rows, cols)
    return QuadraticData(q.n, tuple(tuple(v.get(k, Fraction(0)) for k in cols) for v in perp))


def dual_presentation(p: Presentation) -> Presentation:
    return quadratic_dual(QuadraticData.from_presentation(p)).presentation(p.gens, f"{p.name}_dual")


def _require_homogeneous(p: Presentation):
    for r in p.relators:
        if not r.is_homogeneous():
            raise NotHomogeneousQuadratic(f"relator {r.format(p.gens)} is not homogeneous")


# -- Ext via the reduced bar complex ---------------------------------------

@dataclass(frozen=True)
class ExtTable:
    max_i: int
    max_j: int
    dims: Tuple[Tuple[Optional[int], ...], ...]  # dims[i][j]; None where the size cap was hit
    trusted: bool

    def off_diagonal(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.dims) for j, d in enumerate(row) if i != j and d]

    def diagonal(self) -> Tuple[Optional[int], ...]:
        return tuple(self.dims[i][i] if i <= self.max_j else 0 for i in range(self.max_i + 1))


def _compositions(j: int, i: int):
    """Ordered ways to write ``j`` as a sum of ``i`` positive parts."""
    if i == 1:
        yield (j,)
        return
    for first in range(1, j - i + 2):
        for rest in _compositions(j - first, i - 1):
            yield (first,) + rest


class _BarComplex:
    def __init__(self, sys: RewriteSystem, max_j: int, cap: int):
        self.sys = sys
        self.levels = irreducible_words(sys, max_j)
        self.cap = cap
        self._products: Dict[Tuple[Word, Word], NcPoly] = {}

    def basis(self, i: int, j: int) -> Optional[List[Tuple[Word, ...]]]:
        size = 0
        shapes = list(_compositions(j, i)) if i >= 1 and j >= i else []
        for shape in shapes:
            k = 1
            for d in shape:
                k *= len(self.levels[d])
            size += k
        if size > self.cap:
            return None
        out = []
        for shape in shapes:
            out.extend(product(*(self.levels[d] for d in shape)))
        return out

    def mul(self, u: Word, v: Word) -> NcPoly:
        key = (u, v)
        if key not in self._products:
            self._products[key] = normal_form(self.sys, NcPoly.monomial(u + v))
        return self._products[key]

    def differential_rank(self, i: int, j: int, basis) -> int:
        """Rank of ``d_i`` on the degree-``j`` part of ``(A_+)^{(x) i}``."""
        if i < 2 or not basis:
            return 0
        ech = Echelon()
        for t in basis:
            image: Dict[Tuple[Word, ...], Fraction] = {}
            for k in range(i - 1):
                sign = 1 if k % 2 == 0 else -1
                for w, c in self.mul(t[k], t[k + 1]).items():
                    key = t[:k] + (w,) + t[k + 2:]
                    s = image.get(key, 0) + sign * c
                    if s:
                        image[key] = s
                    else:
                        image.pop(key, None)
            ech.add(image)
        return ech.rank


def ext_table(p: Presentation, max_i: int, max_j: int, cap: int = DEFAULT_SIZE_CAP,
              budget: int = DEFAULT_BUDGET) -> ExtTable:
    """``dim Ext^{i,j}(K, K)`` for ``i <= max_i``, ``j <= max_j``, as Tor of the bar complex."""
    _require_homogeneous(p)
    sys = prepare(p, max_j + 1, budget)
    bar = _BarComplex(sys, max_j, cap)
    dims = [[0] * (max_j + 1) for _ in range(max_i + 1)]
    dims[0][0] = 1
    trusted = True
    for j in range(1, max_j + 1):
        top = min(j, max_i + 1)
        bases = {i: bar.basis(i, j) for i in range(1, top + 1)}
        ranks = {}
        for i in range(1, top + 1):
            ranks[i] = None if bases[i] is None else bar.differential_rank(i, j, bases[i])
        for i in range(1, min(j, max_i) + 1):
            nxt = ranks.get(i + 1, 0)
            if bases[i] is None or ranks[i] is None or nxt is None:
                dims[i][j] = None
                trusted = False
            else:
                dims[i][j] = len(bases[i]) - ranks[i] - nxt
    return ExtTable(max_i, max_j, tuple(tuple(r) for r in dims), trusted)


def graded_dims(p: Presentation, N: int, budget: int = DEFAULT_BUDGET) -> Tuple[int, ...]:
    return hilbert_prefix(prepare(p, N + 1, budget), N).dims


def hilbert_pairing_test(p: Presentation, N: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Check ``sum_k (-1)^k dim A^!_k dim A_{j-k} = 0`` for ``1 <= j <= N``."""
    a = graded_dims(p, N, budget)
    b = graded_dims(dual_presentation(p), N, budget)
    return all(sum((-1) ** k * b[k] * a[j - k] for k in range(j + 1)) == 0 for j in range(1, N + 1))


# -- verdicts ---------------------------------------------------------------

NOT_PRE_KOSZUL = "NotPreKoszul"
CERTIFIED = "CertifiedKoszul"
REFUTED = "RefutedAtDegree"
INCONCLUSIVE = "InconclusiveBounded"


@dataclass(frozen=True)
class KoszulVerdict:
    kind: str
    homogeneous: bool = False
    via: Optional[str] = None
    degree: Optional[Tuple[int, int]] = None
    checked_to: Optional[Tuple[int, int]] = None
    ext: Optional[ExtTable] = None


def verdict_from_ext(table: ExtTable) -> KoszulVerdict:
    off = table.off_diagonal()
    if off:
        return KoszulVerdict(REFUTED, degree=off[0], ext=table)
    return KoszulVerdict(INCONCLUSIVE, checked_to=(table.max_i, table.max_j), ext=table)


def koszul_verdict(p: Presentation, bounds: Tuple[int, int] = (4, 4), cap: int = DEFAULT_SIZE_CAP) -> KoszulVerdict:
    shape = check_shape(p)
    if not shape.valid:
        raise InvalidShape("; ".join(v.message for v in shape.diagnostics))
    pre_k, hom_k = check_pre_koszul_free(p)
    if not pre_k:
        return KoszulVerdict(NOT_PRE_KOSZUL)
    b0 = homogeneous_version(p)
    if certify_pbw_basis(b0).certified:
        return KoszulVerdict(CERTIFIED, homogeneous=hom_k, via="pbw")
    return verdict_from_ext(ext_table(b0, bounds[0], bounds[1], cap))
