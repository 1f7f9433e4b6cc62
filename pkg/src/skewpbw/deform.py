"""PBW-deformation analysis of nonhomogeneous quadratic presentations.

For ``P`` spanned by the relators inside ``F_2 = K + V + V(x)V`` and
``R = pi(P)`` its quadratic projection, the presentation is certified as a
PBW deformation of ``T(V)/<R>`` when

* (I)  ``P`` meets ``F_1`` only in 0,
* (J)  ``(F_1 P F_1) & F_2 == P``,
* and ``T(V)/<R>`` is homogeneous Koszul (here: certified PBW).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .classify import quadratic_part
from .freealg import NcPoly, deglex_key
from .linalg import Echelon, rank
from .presentation import Presentation
from .rewrite import DEFAULT_BUDGET, UnitIdeal, check_confluence, complete_bounded, hilbert_prefix, orient


class DependentQuadraticParts(ValueError):
    pass


CERTIFIED = "CertifiedPBWDeformation"
REFUTED_I = "RefutedByI"
REFUTED_J = "RefutedByJ"
INCONCLUSIVE = "InconclusiveBNotCertified"


@dataclass(frozen=True)
class DeformationData:
    n: int
    P_basis: Tuple[NcPoly, ...]
    R_basis: Tuple[NcPoly, ...]
    alpha: Optional[Tuple[NcPoly, ...]]  # alpha(R_basis[k]) in V
    beta: Optional[Tuple[Fraction, ...]]  # beta(R_basis[k]) in K

    @classmethod
    def from_presentation(cls, p: Presentation) -> "DeformationData":
        rels = list(p.relators)
        if rank(dict(r.items()) for r in rels) < len(rels):
            # redundant relators: replace by an echelon basis of span(P)
            ech = Echelon(priority=deglex_key).extend(dict(r.items()) for r in rels)
            rels = [NcPoly(row) for row in ech.basis()]
        R = tuple(r.graded_component(2) for r in rels)
        if rank(dict(r.items()) for r in R) == len(rels):
            alpha = tuple(-r.graded_component(1) for r in rels)
            beta = tuple(-r.coeff(()) for r in rels)
        else:
            alpha = beta = None
        return cls(p.n, tuple(rels), R, alpha, beta)


def split_alpha_beta(p: Presentation) -> DeformationData:
    d = DeformationData.from_presentation(p)
    if d.alpha is None:
        raise DependentQuadraticParts("degree-2 parts of the relators are linearly dependent")
    return d


def check_condition_I(d: DeformationData) -> bool:
    return rank(dict(r.items()) for r in d.R_basis) == len(d.P_basis)


def check_condition_J(d: DeformationData) -> bool:
    """Compare ``dim((P + VP + PV + VPV) & F_2)`` with ``dim P`` inside ``F_4``."""
    # pivoting on the deglex-largest word: rows whose pivot has length <= 2
    # have no degree-3/4 entries and together span the intersection with F_2
    ech = Echelon(priority=deglex_key)
    letters = [(a,) for a in range(1, d.n + 1)]
    for p in d.P_basis:
        ech.add(dict(p.items()))
        for a in letters:
            ech.add(dict(p.lmul_word(a).items()))
            ech.add(dict(p.rmul_word(a).items()))
            for b in letters:
                ech.add(dict(p.lmul_word(a).rmul_word(b).items()))
    low = sum(1 for piv in ech.pivots if len(piv) <= 2)
    return low == len(d.P_basis)


@dataclass(frozen=True)
class DeformationReport:
    cond_I: bool
    cond_J: bool
    B_koszul_certified: bool
    verdict: str
    gr_hilbert_match: Tuple[bool, int]
    gr_dims: Tuple[int, ...]
    B_dims: Tuple[int, ...]
    trivial: bool
    data: DeformationData
    B: Presentation


def deformation_verdict(p: Presentation, N: int = 5, budget: int = DEFAULT_BUDGET) -> DeformationReport:
    d = DeformationData.from_presentation(p)
    B = quadratic_part(p)
    b_sys = check_confluence(orient(B)).system
    b_certified = b_sys.certified
    cond_I = check_condition_I(d)
    cond_J = check_condition_J(d)
    if not cond_I:
        verdict = REFUTED_I
    elif not cond_J:
        verdict = REFUTED_J
    elif not b_certified:
        verdict = INCONCLUSIVE
    else:
        verdict = CERTIFIED

    try:
        gr_sys, _ = complete_bounded(orient(p), N + 1, budget)
        gr_dims = hilbert_prefix(gr_sys, N).dims
    except UnitIdeal:
        gr_dims = (0,) * (N + 1)  # the algebra is zero
    if not b_certified:
        b_sys, _ = complete_bounded(b_sys, N + 1, budget)
    b_dims = hilbert_prefix(b_sys, N).dims
    return DeformationReport(
        cond_I=cond_I,
        cond_J=cond_J,
        B_koszul_certified=b_certified,
        verdict=verdict,
        gr_hilbert_match=(gr_dims == b_dims, N),
        gr_dims=gr_dims,
        B_dims=b_dims,
        trivial=(p == B),
        data=d,
        B=B,
    )
