"""Exact arithmetic in the free associative algebra Q<x_1, ..., x_n>.

Words are tuples of generator indices ``1..n``; the empty tuple is the unit
monomial. Polynomials map words to :class:`fractions.Fraction` coefficients
and never store a zero coefficient.
"""

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Word = Tuple[int, ...]
ScalarLike = Union[int, Fraction]

#: Degree of the zero polynomial. Never a valid word length.
ZERO_DEGREE = float("-inf")


class ZeroPolynomial(ArithmeticError):
    """Raised when an operation needs a nonzero polynomial."""


def as_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def deglex_key(word: Word):
    return (len(word), word)


def deglex_compare(u: Word, v: Word) -> int:
    """Three-way comparison: -1 if ``u < v``, 0 if equal, 1 if ``u > v``.

    Shorter words are smaller; words of equal length compare letter by
    letter from the left.
    """
    ku, kv = deglex_key(u), deglex_key(v)
    return (ku > kv) - (ku < kv)


class NcPoly:
    """Noncommutative polynomial with rational coefficients. Immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Word, ScalarLike], Iterable[Tuple[Word, ScalarLike]], None] = None):
        collected: Dict[Word, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for word, coeff in items:
                word = tuple(word)
                c = collected.get(word, 0) + as_scalar(coeff)
                if c:
                    collected[word] = c
                else:
                    collected.pop(word, None)
        self._terms = collected
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Word, Fraction]) -> "NcPoly":
        # caller guarantees: no zero coefficients, tuple keys, Fraction values
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, word: Sequence[int], coeff: ScalarLike = 1) -> "NcPoly":
        return cls({tuple(word): coeff})

    @classmethod
    def constant(cls, c: ScalarLike) -> "NcPoly":
        return cls({(): c})

    @classmethod
    def gen(cls, i: int) -> "NcPoly":
        return cls({(i,): 1})

    # -- inspection -------------------------------------------------------

    def items(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(self._terms.items())

    @property
    def support(self) -> Tuple[Word, ...]:
        return tuple(sorted(self._terms, key=deglex_key, reverse=True))

    def coeff(self, word: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree(self):
        if not self._terms:
            return ZERO_DEGREE
        return max(len(w) for w in self._terms)

    def is_homogeneous(self, d: int = None) -> bool:
        lengths = {len(w) for w in self._terms}
        if d is None:
            return len(lengths) <= 1
        return lengths <= {d}

    def is_constant(self) -> bool:
        return all(len(w) == 0 for w in self._terms)

    def letters(self) -> set:
        return {a for w in self._terms for a in w}

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            try:
                other = NcPoly.constant(as_scalar(other))
            except TypeError:
                return NotImplemented
        terms = dict(self._terms)
        for w, c in other._terms.items():
            s = terms.get(w, 0) + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return NcPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            try:
                other = NcPoly.constant(as_scalar(other))
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: ScalarLike) -> "NcPoly":
        c = as_scalar(c)
        if not c:
            return NcPoly()
        return NcPoly._raw({w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def lmul_word(self, left: Word) -> "NcPoly":
        return NcPoly._raw({left + w: c for w, c in self._terms.items()})

    def rmul_word(self, right: Word) -> "NcPoly":
        return NcPoly._raw({w + right: c for w, c in self._terms.items()})

    # -- structure --------------------------------------------------------

    def leading_term(self) -> Tuple[Word, Fraction]:
        return leading_term(self)

    @property
    def leading_word(self) -> Word:
        return leading_term(self)[0]

    def monic(self) -> "NcPoly":
        _, c = leading_term(self)
        return self.scale(1 / c)

    def graded_component(self, d: int) -> "NcPoly":
        return graded_component(self, d)

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self._terms == other._terms
        try:
            return self == NcPoly.constant(as_scalar(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def format(self, names: Sequence[str] = None) -> str:
        """Render in the presentation DSL syntax, terms in descending order."""
        if not self._terms:
            return "0"
        out = []
        for w in self.support:
            c = self._terms[w]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if names is None:
                word = "*".join(f"x{i}" for i in w)
            else:
                word = "*".join(names[i - 1] for i in w)
            if not w:
                body = str(a)
            elif a == 1:
                body = word
            else:
                body = f"{a}*{word}"
            if not out:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __repr__(self):
        return f"NcPoly({self.format()})"

    __str__ = format


def multiply(p: NcPoly, q: NcPoly) -> NcPoly:
    terms: Dict[Word, Fraction] = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            w = u + v
            s = terms.get(w, 0) + a * b
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
    return NcPoly._raw(terms)


def leading_term(p: NcPoly) -> Tuple[Word, Fraction]:
    if not p:
        raise ZeroPolynomial("the zero polynomial has no leading term")
    w = max(p._terms, key=deglex_key)
    return w, p._terms[w]


def graded_component(p: NcPoly, d: int) -> NcPoly:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return NcPoly._raw({w: c for w, c in p._terms.items() if len(w) == d})


def words(n: int, d: int) -> Iterator[Word]:
    """All words of length ``d`` over ``n`` letters, in increasing deglex order."""
    if d == 0:
        yield ()
        return
    for head in range(1, n + 1):
        for tail in words(n, d - 1):
            yield (head,) + tail
