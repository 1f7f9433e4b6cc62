"""Algebra presentations and the ``.alg`` text format.

A file looks like::

    algebra qplane
    param q nonzero = 2
    generators x, y
    relation y*x = q*x*y

Each ``relation lhs = rhs`` contributes the relator ``lhs - rhs``. Parameters
are substituted with concrete rationals while parsing.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .freealg import NcPoly, as_scalar


class PresentationError(ValueError):
    """Base class for invalid presentation input."""

    def __init__(self, message: str, line: Optional[int] = None, col: Optional[int] = None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, column {col}: {message}"
        super().__init__(message)


class DSLSyntaxError(PresentationError):
    pass


class UnknownGenerator(PresentationError):
    pass


class UnboundParameter(PresentationError):
    pass


class ZeroParameter(PresentationError):
    pass


class DegreeTooHigh(PresentationError):
    pass


class ZeroRelator(PresentationError):
    pass


class UnknownFixture(PresentationError, KeyError):
    pass


@dataclass(frozen=True)
class Presentation:
    """Generators plus relators of degree at most 2; relator ``r`` means ``r = 0``.

    Equality compares generators and relators only.
    """

    name: str = field(compare=False)
    gens: Tuple[str, ...]
    relators: Tuple[NcPoly, ...]
    params: Dict[str, Fraction] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if not self.gens:
            raise PresentationError("at least one generator is required")
        if len(set(self.gens)) != len(self.gens):
            raise PresentationError(f"duplicate generator names in {self.gens}")
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "relators", tuple(self.relators))
        n = len(self.gens)
        for k, r in enumerate(self.relators):
            if not r:
                raise ZeroRelator(f"relator {k + 1} is zero")
            if r.degree > 2:
                raise DegreeTooHigh(f"relator {k + 1} has degree {r.degree}: {r.format(self.gens)}")
            bad = [a for a in r.letters() if not 1 <= a <= n]
            if bad:
                raise UnknownGenerator(f"relator {k + 1} uses generator index {bad[0]} outside 1..{n}")

    @property
    def n(self) -> int:
        return len(self.gens)

    def with_relators(self, relators: Sequence[NcPoly], name: Optional[str] = None) -> "Presentation":
        return Presentation(name or self.name, self.gens, tuple(r for r in relators if r), dict(self.params))

    def format_relators(self) -> List[str]:
        return [r.format(self.gens) for r in self.relators]


# -- tokenizer ------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>#[^\n]*)|(?P<nl>\n)|(?P<int>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[=,*+\-/])|(?P<bad>.)"
)
_KEYWORDS = {"algebra", "param", "nonzero", "generators", "relation"}


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    line, start = 1, 0
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        col = m.start() - start + 1
        if kind == "nl":
            line, start = line + 1, m.end()
            continue
        if kind in ("ws", "comment"):
            continue
        if kind == "bad":
            raise DSLSyntaxError(f"unexpected character {m.group()!r}", line, col)
        if kind == "ident" and m.group() in _KEYWORDS:
            kind = "kw"
        toks.append(_Tok(kind, m.group(), line, col))
    toks.append(_Tok("eof", "", line, len(text) - start + 1))
    return toks


class _Parser:
    def __init__(self, text: str, params: Mapping[str, object]):
        self.toks = _tokenize(text)
        self.pos = 0
        self.overrides = {k: as_scalar(v) for k, v in (params or {}).items()}
        self.params: Dict[str, Fraction] = dict(self.overrides)
        self.nonzero = set()
        self.gens: Dict[str, int] = {}

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def error(self, msg, tok=None, cls=DSLSyntaxError):
        tok = tok or self.peek()
        return cls(msg, tok.line, tok.col)

    def expect(self, kind, text=None) -> _Tok:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise self.error(f"expected {want!r}, found {got!r}")
        return self.next()

    def at(self, kind, text=None) -> bool:
        t = self.peek()
        return t.kind == kind and (text is None or t.text == text)

    # file := "algebra" IDENT param* gens relation*
    def parse(self) -> Presentation:
        self.expect("kw", "algebra")
        name = self.expect("ident").text
        while self.at("kw", "param"):
            self.parse_param()
        for pname in self.nonzero:
            if self.params[pname] == 0:
                raise ZeroParameter(f"parameter {pname!r} is declared nonzero but bound to 0")
        self.expect("kw", "generators")
        self.add_gen(self.expect("ident"))
        while self.at("sym", ","):
            self.next()
            self.add_gen(self.expect("ident"))
        relators = []
        while self.at("kw", "relation"):
            kw = self.next()
            lhs = self.parse_poly()
            self.expect("sym", "=")
            rhs = self.parse_poly()
            r = lhs - rhs
            if not r:
                raise self.error("relation reduces to 0 = 0", kw, ZeroRelator)
            if r.degree > 2:
                raise self.error(f"relator has degree {r.degree}; at most 2 is allowed", kw, DegreeTooHigh)
            relators.append(r)
        self.expect("eof")
        return Presentation(name, tuple(self.gens), tuple(relators), dict(self.params))

    def parse_param(self):
        self.next()
        ident = self.expect("ident")
        if self.at("kw", "nonzero"):
            self.next()
            self.nonzero.add(ident.text)
        self.expect("sym", "=")
        value = self.parse_rational()
        # externally supplied bindings win over file defaults
        self.params.setdefault(ident.text, value)

    def parse_rational(self) -> Fraction:
        neg = False
        if self.at("sym", "-"):
            self.next()
            neg = True
        t = self.peek()
        if t.kind == "int":
            self.next()
            value = Fraction(int(t.text))
            if self.at("sym", "/"):
                self.next()
                den = self.expect("int")
                if int(den.text) == 0:
                    raise self.error("zero denominator", den)
                value /= int(den.text)
        elif t.kind == "ident":
            self.next()
            if t.text not in self.params:
                raise self.error(f"parameter {t.text!r} is not bound", t, UnboundParameter)
            value = self.params[t.text]
        else:
            raise self.error(f"expected a rational, found {t.text or 'end of input'!r}")
        return -value if neg else value

    def add_gen(self, tok: _Tok):
        if tok.text in self.gens:
            raise self.error(f"duplicate generator {tok.text!r}", tok)
        if tok.text in self.params:
            raise self.error(f"generator {tok.text!r} clashes with a parameter", tok)
        self.gens[tok.text] = len(self.gens) + 1

    # poly := ["-"] term (("+"|"-") term)*
    def parse_poly(self) -> NcPoly:
        sign = 1
        if self.at("sym", "-"):
            self.next()
            sign = -1
        total = self.parse_term().scale(sign)
        while self.at("sym", "+") or self.at("sym", "-"):
            sign = 1 if self.next().text == "+" else -1
            total = total + self.parse_term().scale(sign)
        return total

    # term := RATIONAL ("*" RATIONAL)* ["*" wordpart] | wordpart
    def parse_term(self) -> NcPoly:
        coeff = Fraction(1)
        word = []
        while True:
            t = self.peek()
            if t.kind == "int":
                if word:
                    raise self.error("scalar factor after a generator")
                coeff *= self.parse_rational()
            elif t.kind == "ident":
                self.next()
                if t.text in self.gens:
                    word.append(self.gens[t.text])
                elif word:
                    raise self.error(f"unknown generator {t.text!r}", t, UnknownGenerator)
                elif t.text in self.params:
                    coeff *= self.params[t.text]
                elif self.at("sym", "*"):
                    raise self.error(f"parameter {t.text!r} is not bound", t, UnboundParameter)
                else:
                    raise self.error(f"unknown generator {t.text!r}", t, UnknownGenerator)
            else:
                raise self.error(f"expected a term, found {t.text or 'end of input'!r}")
            if not self.at("sym", "*"):
                break
            self.next()
        return NcPoly.monomial(tuple(word), coeff)


def parse_presentation(text: str, params: Optional[Mapping[str, object]] = None) -> Presentation:
    """Parse ``.alg`` source. ``params`` override the file's parameter defaults."""
    return _Parser(text, params or {}).parse()


def serialize(p: Presentation) -> str:
    lines = [f"algebra {p.name}"]
    if p.params:
        bound = ", ".join(f"{k}={v}" for k, v in sorted(p.params.items()))
        lines.append(f"# substituted parameters: {bound}")
    lines.append("generators " + ", ".join(p.gens))
    for r in p.relators:
        lines.append(f"relation {r.format(p.gens)} = 0")
    return "\n".join(lines) + "\n"


def load(path: str, params: Optional[Mapping[str, object]] = None) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read(), params)


def parse_param_binding(binding: str) -> Tuple[str, Fraction]:
    """``"q=3/2"`` -> ``("q", Fraction(3, 2))``."""
    name, sep, value = binding.partition("=")
    name = name.strip()
    if not sep or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
        raise DSLSyntaxError(f"bad parameter binding {binding!r}; expected NAME=RATIONAL")
    try:
        return name, Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise DSLSyntaxError(f"bad rational in parameter binding {binding!r}") from None
