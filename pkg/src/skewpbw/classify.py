"""Shape check and subclass flags for skew PBW extensions of a field.

A presentation has the skew PBW shape when, after making each relator monic
on its deglex leading word, there is exactly one relator per pair ``i < j``
of the form::

    x_j x_i - c_ij x_i x_j + r_1 x_1 + ... + r_n x_n + r_0,   c_ij != 0
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .freealg import NcPoly
from .presentation import Presentation


class InvalidShape(ValueError):
    pass


class Tri(enum.Enum):
    YES = "yes"
    NO = "no"
    UNCHECKED = "unchecked"


@dataclass(frozen=True)
class PairData:
    c: Fraction
    linear: Tuple[Fraction, ...]
    constant: Fraction


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    relator: int = None  # 1-based, None for pair-level violations


@dataclass(frozen=True)
class ShapeReport:
    valid: bool
    pair_table: Dict[Tuple[int, int], PairData] = field(default_factory=dict)
    diagnostics: Tuple[Violation, ...] = ()

    def codes(self) -> List[str]:
        return [v.code for v in self.diagnostics]


@dataclass(frozen=True)
class SubclassFlags:
    constant: bool
    bijective: bool
    pre_commutative: bool
    quasi_commutative: bool
    semi_commutative: bool
    pre_koszul: bool
    homogeneous_pre_koszul: bool
    basis_certified: Tri = Tri.UNCHECKED

    def marks(self) -> Tuple[bool, bool, bool, bool, bool]:
        return (self.constant, self.bijective, self.pre_commutative,
                self.quasi_commutative, self.semi_commutative)


def check_shape(p: Presentation) -> ShapeReport:
    names = p.gens
    n = p.n
    table: Dict[Tuple[int, int], PairData] = {}
    diags: List[Violation] = []

    def word(w):
        return "*".join(names[a - 1] for a in w)

    for k, rel in enumerate(p.relators, start=1):
        m = rel.monic()
        lead = m.leading_word
        if len(lead) != 2:
            diags.append(Violation("NotBinomialLead", f"relator {k} has leading word of degree {len(lead)}", k))
            continue
        a, b = lead
        if a == b:
            diags.append(Violation("ForeignQuadraticWord", f"relator {k} is led by the square {word(lead)}", k))
            continue
        if a < b:
            diags.append(Violation(
                "NotBinomialLead", f"relator {k} is led by {word(lead)} without the partner {word((b, a))}", k))
            continue
        j, i = a, b
        quad = m.graded_component(2)
        foreign = [w for w in quad.support if w not in ((j, i), (i, j))]
        if foreign:
            for w in foreign:
                diags.append(Violation(
                    "ForeignQuadraticWord", f"relator {k} contains {word(w)}, outside {{{word((j, i))}, {word((i, j))}}}", k))
            continue
        c = -m.coeff((i, j))
        if c == 0:
            diags.append(Violation("ZeroC", f"relator {k} has no {word((i, j))} term (c = 0)", k))
            continue
        if (i, j) in table:
            diags.append(Violation("DuplicatePair", f"relator {k} repeats the pair ({names[i - 1]}, {names[j - 1]})", k))
            continue
        linear = tuple(m.coeff((t,)) for t in range(1, n + 1))
        table[(i, j)] = PairData(c, linear, m.coeff(()))

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in table:
                diags.append(Violation("MissingPair", f"no relation for the pair ({names[i - 1]}, {names[j - 1]})"))
    return ShapeReport(not diags, table, tuple(diags))


def check_pre_koszul_free(p: Presentation) -> Tuple[bool, bool]:
    """(pre-Koszul, homogeneous pre-Koszul) read off the relators directly."""
    pre = all(not r.graded_component(0) for r in p.relators)
    hom = pre and all(not r.graded_component(1) for r in p.relators)
    return pre, hom


def classify_subclasses(p: Presentation, shape: ShapeReport = None) -> SubclassFlags:
    shape = shape or check_shape(p)
    if not shape.valid:
        raise InvalidShape("; ".join(v.message for v in shape.diagnostics))
    rows = shape.pair_table.values()
    pre_comm = all(d.constant == 0 for d in rows)
    quasi = pre_comm and all(not any(d.linear) for d in rows)
    pre_k, hom_k = check_pre_koszul_free(p)
    # over a field every scalar is central: sigma_i = id, delta_i = 0, c_ij invertible
    return SubclassFlags(
        constant=True,
        bijective=True,
        pre_commutative=pre_comm,
        quasi_commutative=quasi,
        semi_commutative=quasi,
        pre_koszul=pre_k,
        homogeneous_pre_koszul=hom_k,
    )


def quadratic_part(p: Presentation) -> Presentation:
    """Truncate every relator to its degree-2 component (dropping relators that vanish)."""
    return p.with_relators([r.graded_component(2) for r in p.relators], name=f"{p.name}_hom")


def homogeneous_version(p: Presentation) -> Presentation:
    """The quasi-commutative presentation on the same ``c_ij``, one relator per pair in order."""
    shape = check_shape(p)
    if not shape.valid:
        raise InvalidShape("; ".join(v.message for v in shape.diagnostics))
    return from_constants(p.gens, {k: v.c for k, v in shape.pair_table.items()}, name=f"{p.name}_hom")


def from_constants(gens, c: Dict[Tuple[int, int], Fraction], name: str = "sigma") -> Presentation:
    """Quasi-commutative presentation ``x_j x_i - c_ij x_i x_j`` for each ``i < j``."""
    rels = [NcPoly({(j, i): 1, (i, j): -c[i, j]}) for (i, j) in sorted(c)]
    return Presentation(name, tuple(gens), tuple(rels))
