"""Embedded fixture presentations.

The ten Sridharan types use the convention that each table cell ``v`` for a
bracket ``[a, b]`` yields the relation ``a*b - b*a = v``.
"""

from typing import Dict, List, Mapping, Optional

from .presentation import Presentation, UnknownFixture, parse_presentation

_SRIDHARAN_CELLS = {
    1: ("0", "0", "0"),
    2: ("0", "x", "0"),
    3: ("x", "0", "0"),
    4: ("0", "alpha*y", "-x"),
    5: ("0", "y", "-x - y"),
    6: ("z", "-2*y", "-2*x"),
    7: ("1", "0", "0"),
    8: ("1", "x", "0"),
    9: ("x", "1", "0"),
    10: ("1", "y", "x"),
}


def _sridharan(k: int) -> str:
    xy, yz, zx = _SRIDHARAN_CELLS[k]
    head = f"algebra sridharan{k}\n"
    if "alpha" in xy + yz + zx:
        head += "param alpha nonzero = 2\n"
    return head + (
        "generators x, y, z\n"
        f"relation x*y - y*x = {xy}\n"
        f"relation y*z - z*y = {yz}\n"
        f"relation z*x - x*z = {zx}\n"
    )


SOURCES: Dict[str, str] = {f"sridharan{k}": _sridharan(k) for k in range(1, 11)}

SOURCES.update(
    {
        "weyl": """\
algebra weyl
generators x, y
relation x*y - y*x = 1
""",
        "poly1": """\
algebra poly1
generators x
""",
        "poly2": """\
algebra poly2
generators x, y
relation y*x = x*y
""",
        "poly3": """\
algebra poly3
generators x, y, z
relation y*x = x*y
relation z*x = x*z
relation z*y = y*z
""",
        "qplane": """\
algebra qplane
param q nonzero = 2
generators x, y
relation y*x = q*x*y
""",
        "qaffine3": """\
algebra qaffine3
param q12 nonzero = 2
param q13 nonzero = 3
param q23 nonzero = 5
generators x1, x2, x3
relation x2*x1 = q12*x1*x2
relation x3*x1 = q13*x1*x3
relation x3*x2 = q23*x2*x3
""",
        # c = 0 member of the three-parameter family
        "sklyanin": """\
algebra sklyanin
param a nonzero = 1
param b nonzero = 2
generators x, y, z
relation a*y*x + b*x*y = 0
relation a*x*z + b*z*x = 0
relation a*z*y + b*y*z = 0
""",
        # bracket [x,y]=x, [y,z]=y, [z,x]=z violates Jacobi
        "nonjacobi": """\
algebra nonjacobi
generators x, y, z
relation x*y - y*x = x
relation y*z - z*y = y
relation z*x - x*z = z
""",
        "x2defect": """\
algebra x2defect
generators x, y
relation y*x = x*y + x*x
""",
        "free2": """\
algebra free2
generators x, y
""",
    }
)

ALIASES = {"usl2": "sridharan6"}

CORPORA: Dict[str, List[str]] = {
    "sridharan": [f"sridharan{k}" for k in range(1, 11)],
    "core": ["poly3", "sklyanin", "qaffine3"],
    "all": list(SOURCES),
}


def fixture_names() -> List[str]:
    return list(SOURCES)


def fixture(name: str, params: Optional[Mapping[str, object]] = None) -> Presentation:
    key = ALIASES.get(name, name)
    if key not in SOURCES:
        raise UnknownFixture(f"unknown fixture {name!r}")
    return parse_presentation(SOURCES[key], params)


def corpus(selector: str) -> List[str]:
    """Resolve ``sridharan``, ``core``, ``all`` or a comma-separated name list."""
    if selector in CORPORA:
        return list(CORPORA[selector])
    names = [s.strip() for s in selector.split(",") if s.strip()]
    for n in names:
        if ALIASES.get(n, n) not in SOURCES:
            raise UnknownFixture(f"unknown fixture {n!r}")
    return names
