"""Rewriting systems in the free algebra under deglex order.

Relators are oriented ``lead -> tail`` with every tail word deglex-smaller
than the lead. Overlap ambiguities are resolved two ways; when all of them
close, normal forms are unique and the irreducible words form a basis
(diamond lemma). Otherwise :func:`complete_bounded` adds the failing
differences as new rules up to a degree bound.
"""

import enum
from collections import defaultdict
from dataclasses import dataclass, field, replace
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from .classify import InvalidShape, check_shape
from .freealg import NcPoly, Word, deglex_key
from .linalg import Echelon
from .presentation import Presentation

DEFAULT_BUDGET = 10000


class UnitIdeal(ArithmeticError):
    """The relators generate the whole free algebra; the quotient is 0."""


class BudgetExceeded(RuntimeError):
    pass


class InsufficientCompletion(ValueError):
    pass


class NotHomogeneousQuadratic(ValueError):
    pass


class Confluence(enum.Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    UNCHECKED = "unchecked"


@dataclass(frozen=True)
class RewriteRule:
    lead: Word
    tail: NcPoly

    def as_poly(self) -> NcPoly:
        return NcPoly.monomial(self.lead) - self.tail

    @property
    def degree(self) -> int:
        return len(self.lead)

    def format(self, names) -> str:
        lead = "*".join(names[a - 1] for a in self.lead)
        return f"{lead} -> {self.tail.format(names)}"


@dataclass(frozen=True)
class RewriteSystem:
    gens: Tuple[str, ...]
    rules: Tuple[RewriteRule, ...]
    confluence: Confluence = Confluence.UNCHECKED
    witness: Optional[NcPoly] = None
    completion_degree: int = 0
    _index: Dict[int, List[RewriteRule]] = field(default=None, compare=False, repr=False)
    _memo: Dict[str, Dict[Word, NcPoly]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        rules = tuple(sorted(self.rules, key=lambda r: deglex_key(r.lead)))
        object.__setattr__(self, "rules", rules)
        index = defaultdict(list)
        for r in rules:
            index[r.lead[0]].append(r)
        object.__setattr__(self, "_index", dict(index))
        object.__setattr__(self, "_memo", {"left": {}, "right": {}})

    @property
    def n(self) -> int:
        return len(self.gens)

    @property
    def certified(self) -> bool:
        return self.confluence is Confluence.CERTIFIED

    @property
    def leads(self) -> Tuple[Word, ...]:
        return tuple(r.lead for r in self.rules)

    def find(self, word: Word, strategy: str = "left") -> Optional[Tuple[int, RewriteRule]]:
        """First occurrence of a rule lead inside ``word``, scanning from one end."""
        positions = range(len(word)) if strategy == "left" else range(len(word) - 1, -1, -1)
        for pos in positions:
            for rule in self._index.get(word[pos], ()):
                m = len(rule.lead)
                if word[pos:pos + m] == rule.lead:
                    return pos, rule
        return None

    def is_irreducible(self, word: Word) -> bool:
        return self.find(word) is None

    def _nf_word(self, word: Word, strategy: str) -> NcPoly:
        memo = self._memo[strategy]
        hit = memo.get(word)
        if hit is not None:
            return hit
        # explicit stack instead of recursion: long reduction chains are possible
        stack = [word]
        while stack:
            w = stack[-1]
            if w in memo:
                stack.pop()
                continue
            found = self.find(w, strategy)
            if found is None:
                memo[w] = NcPoly.monomial(w)
                stack.pop()
                continue
            pos, rule = found
            left, right = w[:pos], w[pos + len(rule.lead):]
            pending = [left + u + right for u, _ in rule.tail.items()]
            missing = [u for u in pending if u not in memo]
            if missing:
                stack.extend(missing)
                continue
            total = NcPoly()
            for u, c in rule.tail.items():
                total = total + memo[left + u + right].scale(c)
            memo[w] = total
            stack.pop()
        return memo[word]

    def rules_table(self) -> List[str]:
        return [r.format(self.gens) for r in self.rules]


def normal_form(sys: RewriteSystem, p: NcPoly, strategy: str = "left") -> NcPoly:
    """Fully reduce ``p``. Unique (strategy-independent) when ``sys`` is confluent."""
    out = NcPoly()
    for w, c in p.items():
        out = out + sys._nf_word(w, strategy).scale(c)
    return out


def reduce_counting(sys: RewriteSystem, p: NcPoly, strategy: str = "left") -> Tuple[NcPoly, int]:
    """Unmemoized reduction returning ``(normal form, number of rewrite steps)``.

    Always rewrites the deglex-largest pending word, so each word is rewritten
    at most once.
    """
    work: Dict[Word, object] = dict(p.items())
    done: Dict[Word, object] = {}
    steps = 0
    while work:
        w = max(work, key=deglex_key)
        c = work.pop(w)
        found = sys.find(w, strategy)
        if found is None:
            done[w] = done.get(w, 0) + c
            continue
        steps += 1
        pos, rule = found
        left, right = w[:pos], w[pos + len(rule.lead):]
        for u, d in rule.tail.items():
            v = left + u + right
            s = work.get(v, 0) + c * d
            if s:
                work[v] = s
            else:
                work.pop(v, None)
    return NcPoly(done), steps


# -- orientation and inter-reduction --------------------------------------

def _rule_from(poly: NcPoly) -> RewriteRule:
    m = poly.monic()
    lead = m.leading_word
    return RewriteRule(lead, NcPoly.monomial(lead) - m)


def interreduce(gens: Sequence[str], polys: Sequence[NcPoly]) -> List[RewriteRule]:
    """Monic, mutually reduced generating set of the same ideal, as rules."""
    basis = [q.monic() for q in polys if q]
    for q in basis:
        if q.is_constant():
            raise UnitIdeal("a nonzero constant lies in the ideal")
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda q: deglex_key(q.leading_word))
        for idx, g in enumerate(basis):
            others = basis[:idx] + basis[idx + 1:]
            if not others:
                break
            sys = RewriteSystem(tuple(gens), tuple(_rule_from(o) for o in others))
            r = normal_form(sys, g)
            if r == g:
                continue
            basis.pop(idx)
            if r:
                if r.is_constant():
                    raise UnitIdeal("a nonzero constant lies in the ideal")
                basis.append(r.monic())
            changed = True
            break
    return [_rule_from(q) for q in basis]


def orient(p: Presentation) -> RewriteSystem:
    rules = interreduce(p.gens, p.relators)
    return RewriteSystem(p.gens, tuple(rules))


# -- overlaps -------------------------------------------------------------

@dataclass(frozen=True)
class Overlap:
    word: Word
    first: RewriteRule
    second: RewriteRule
    difference: NcPoly


def overlaps(rules: Sequence[RewriteRule], max_deg: Optional[int] = None) -> List[Overlap]:
    """All intersection and inclusion ambiguities, ordered by deglex of the overlap word."""
    found = []
    for r1 in rules:
        for r2 in rules:
            a, b = r1.lead, r2.lead
            # intersection: a = AB, b = BC with B nonempty and A, C nonempty
            for k in range(1, min(len(a), len(b))):
                if a[-k:] == b[:k]:
                    word = a + b[k:]
                    if max_deg is not None and len(word) > max_deg:
                        continue
                    diff = r1.tail.rmul_word(b[k:]) - r2.tail.lmul_word(a[:-k])
                    found.append(Overlap(word, r1, r2, diff))
            # inclusion: b occurs inside a
            if r1 is not r2 and len(b) <= len(a):
                for pos in range(len(a) - len(b) + 1):
                    if a[pos:pos + len(b)] == b:
                        if max_deg is not None and len(a) > max_deg:
                            continue
                        diff = r1.tail - r2.tail.lmul_word(a[:pos]).rmul_word(a[pos + len(b):])
                        found.append(Overlap(a, r1, r2, diff))
    found.sort(key=lambda o: (deglex_key(o.word), deglex_key(o.first.lead), deglex_key(o.second.lead)))
    return found


@dataclass(frozen=True)
class PBWCertificate:
    certified: bool
    witness: Optional[NcPoly]
    obstruction_count: int
    overlap_word: Optional[Word]
    system: RewriteSystem


def check_confluence(sys: RewriteSystem) -> PBWCertificate:
    """Resolve every ambiguity of ``sys``; exact by the diamond lemma."""
    obs = overlaps(sys.rules)
    for ov in obs:
        r = normal_form(sys, ov.difference)
        if r:
            refuted = replace(sys, confluence=Confluence.REFUTED, witness=r)
            return PBWCertificate(False, r, len(obs), ov.word, refuted)
    ok = replace(sys, confluence=Confluence.CERTIFIED)
    return PBWCertificate(True, None, len(obs), None, ok)


def certify_pbw_basis(p: Presentation) -> PBWCertificate:
    """Decide whether the standard monomials form a basis of a skew-PBW-shaped presentation."""
    shape = check_shape(p)
    if not shape.valid:
        raise InvalidShape("; ".join(v.message for v in shape.diagnostics))
    return check_confluence(orient(p))


# -- bounded completion ---------------------------------------------------

@dataclass(frozen=True)
class CompletionReport:
    added: Tuple[RewriteRule, ...]
    rounds: int
    max_deg: int


def complete_bounded(sys: RewriteSystem, max_deg: int, budget: int = DEFAULT_BUDGET) -> Tuple[RewriteSystem, CompletionReport]:
    if max_deg < 2:
        raise ValueError("max_deg must be at least 2")
    gens = sys.gens
    rules = list(sys.rules)
    added: List[RewriteRule] = []
    rounds = 0
    while True:
        current = RewriteSystem(gens, tuple(rules))
        failures = []
        for ov in overlaps(rules, max_deg):
            r = normal_form(current, ov.difference)
            if r:
                failures.append(r)
        if not failures:
            break
        rounds += 1
        new = min(failures, key=lambda f: deglex_key(f.leading_word))
        new_rule = _rule_from(new)
        added.append(new_rule)
        rules = interreduce(gens, [r.as_poly() for r in rules] + [new_rule.as_poly()])
        if len(rules) > budget:
            raise BudgetExceeded(f"completion exceeded {budget} rules")
    all_overlaps_checked = all(len(ov.word) <= max_deg for ov in overlaps(rules))
    state = Confluence.CERTIFIED if all_overlaps_checked else Confluence.UNCHECKED
    done = RewriteSystem(gens, tuple(rules), confluence=state, completion_degree=max_deg)
    return done, CompletionReport(tuple(added), rounds, max_deg)


def prepare(p: Presentation, degree: int, budget: int = DEFAULT_BUDGET) -> RewriteSystem:
    """Oriented system that is confluent, or complete at least through ``degree``."""
    cert = check_confluence(orient(p))
    if cert.certified:
        return cert.system
    done, _ = complete_bounded(cert.system, max(degree, 2), budget)
    return done


# -- Hilbert prefixes and S-sets --------------------------------------------

@dataclass(frozen=True)
class HilbertPrefix:
    dims: Tuple[int, ...]
    valid_to: int
    exact: bool


def irreducible_words(sys: RewriteSystem, max_deg: int) -> List[List[Word]]:
    """Irreducible words grouped by length ``0..max_deg``."""
    leads_by_last = defaultdict(list)
    for lead in sys.leads:
        leads_by_last[lead[-1]].append(lead)
    levels = [[()]]
    for _ in range(max_deg):
        nxt = []
        for w in levels[-1]:
            for a in range(1, sys.n + 1):
                v = w + (a,)
                if not any(len(l) <= len(v) and v[len(v) - len(l):] == l for l in leads_by_last[a]):
                    nxt.append(v)
        levels.append(nxt)
    return levels


def hilbert_prefix(sys: RewriteSystem, max_deg: int) -> HilbertPrefix:
    if not (sys.certified or sys.completion_degree >= max_deg + 1):
        raise InsufficientCompletion(
            f"system is complete only to degree {sys.completion_degree}; need {max_deg + 1}")
    dims = tuple(len(level) for level in irreducible_words(sys, max_deg))
    return HilbertPrefix(dims, max_deg, sys.certified)


@dataclass(frozen=True)
class SSets:
    S: FrozenSet[Tuple[int, int]]
    Sm: Dict[int, FrozenSet[Tuple[int, ...]]]

    @property
    def counts(self) -> Tuple[int, ...]:
        return tuple(len(self.Sm[m]) for m in sorted(self.Sm))


def compute_S(p: Presentation, max_m: int) -> SSets:
    """Pairs ``(l, m)`` whose class in ``L_2/R`` is independent of the lex-smaller pairs."""
    for r in p.relators:
        if not r.is_homogeneous(2):
            raise NotHomogeneousQuadratic(f"relator {r.format(p.gens)} is not homogeneous quadratic")
    # pivoting on the lex-largest pair marks exactly the pairs spanned by smaller ones
    ech = Echelon().extend(dict(r.items()) for r in p.relators)
    n = p.n
    S = frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if (i, j) not in ech.pivots)
    Sm = {0: frozenset({()})}
    if max_m >= 1:
        level = {(i,) for i in range(1, n + 1)}
        Sm[1] = frozenset(level)
        for m in range(2, max_m + 1):
            level = {t + (b,) for t in level for b in range(1, n + 1) if (t[-1], b) in S}
            Sm[m] = frozenset(level)
    return SSets(S, Sm)


def standard_monomial_count(n: int, d: int) -> int:
    return comb(d + n - 1, n - 1)
