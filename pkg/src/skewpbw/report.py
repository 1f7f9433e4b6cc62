"""Build JSON-ready analysis reports and render them as text.

Text output is rendered from the same dict that is serialized to JSON, so
the two formats cannot disagree on a verdict.
"""

import json
from dataclasses import replace
from importlib import resources
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .classify import Tri, check_pre_koszul_free, check_shape, classify_subclasses, homogeneous_version
from .deform import DeformationReport, deformation_verdict
from .koszul import CERTIFIED, NOT_PRE_KOSZUL, REFUTED, ExtTable, ext_table, hilbert_pairing_test, koszul_verdict
from .presentation import Presentation
from .rewrite import DEFAULT_BUDGET, UnitIdeal, certify_pbw_basis, complete_bounded, compute_S, hilbert_prefix, orient, prepare

KEYS = (
    "tool", "version", "command", "algebra", "generators", "relators", "parameters",
    "shape", "flags", "pbw", "s_counts", "koszul", "ext", "pairing", "hilbert",
    "deformation", "summary", "notes",
)

PARAM_NOTE = ("parameters were substituted by the rational values listed; "
              "special parameter values can change dimensions and verdicts")

YES, NO = "✓", "★"


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def _word(names, w) -> str:
    return "*".join(names[a - 1] for a in w) or "1"


def _empty(p: Presentation, command: str) -> Dict:
    rep = dict.fromkeys(KEYS)
    rep.update(
        tool="skewpbw",
        version=__version__,
        command=command,
        algebra=p.name,
        generators=list(p.gens),
        relators=p.format_relators(),
        parameters={k: _q(v) for k, v in sorted(p.params.items())},
        summary=[],
        notes=[PARAM_NOTE] if p.params else [],
    )
    return rep


def _shape_block(p: Presentation, shape) -> Dict:
    names = p.gens
    pairs = []
    for (i, j), d in sorted(shape.pair_table.items()):
        pairs.append({
            "i": i, "j": j,
            "lead": _word(names, (j, i)),
            "c": _q(d.c),
            "linear": [_q(v) for v in d.linear],
            "constant": _q(d.constant),
        })
    return {
        "valid": shape.valid,
        "pairs": pairs,
        "diagnostics": [{"code": v.code, "message": v.message, "relator": v.relator} for v in shape.diagnostics],
    }


def _flags_block(flags) -> Dict:
    return {
        "C": flags.constant,
        "B": flags.bijective,
        "P": flags.pre_commutative,
        "QC": flags.quasi_commutative,
        "SC": flags.semi_commutative,
        "pre_koszul": flags.pre_koszul,
        "homogeneous_pre_koszul": flags.homogeneous_pre_koszul,
        "basis_certified": flags.basis_certified.value,
    }


def _classify_into(rep: Dict, p: Presentation, certificate=None):
    shape = check_shape(p)
    rep["shape"] = _shape_block(p, shape)
    if not shape.valid:
        pre, hom = check_pre_koszul_free(p)
        rep["summary"].append("shape: INVALID (" + ", ".join(sorted(set(shape.codes()))) + ")")
        rep["summary"].append(f"pre-Koszul: {'yes' if pre else 'no'} (homogeneous: {'yes' if hom else 'no'})")
        return None
    flags = classify_subclasses(p, shape)
    if certificate is not None:
        flags = replace(flags, basis_certified=Tri.YES if certificate.certified else Tri.NO)
    rep["flags"] = _flags_block(flags)
    rep["summary"].append("shape: valid skew PBW presentation over the base field")
    return flags


def classify_report(p: Presentation) -> Dict:
    rep = _empty(p, "classify")
    _classify_into(rep, p)
    return rep


def _ext_block(t: ExtTable) -> Dict:
    return {"max_i": t.max_i, "max_j": t.max_j, "dims": [list(r) for r in t.dims],
            "trusted": t.trusted, "off_diagonal": [list(c) for c in t.off_diagonal()]}


def _koszul_line(v) -> str:
    if v.kind == NOT_PRE_KOSZUL:
        return "Koszul: NOT APPLICABLE (not pre-Koszul: some relator has a constant term)"
    if v.kind == CERTIFIED:
        if v.homogeneous:
            return "homogeneous Koszul: CERTIFIED (PBW algebra)"
        return "Koszul: CERTIFIED (pre-commutative, homogeneous version is a PBW algebra)"
    if v.kind == REFUTED:
        i, j = v.degree
        return f"Koszul: REFUTED (Ext^{{{i},{j}}} of the homogeneous version is nonzero)"
    return "Koszul: INCONCLUSIVE (no off-diagonal Ext through ({},{}))".format(*v.checked_to)


def _filtered_dims(p: Presentation, N: int, budget: int) -> Optional[List[int]]:
    try:
        sys, _ = complete_bounded(orient(p), N + 1, budget)
    except UnitIdeal:
        return None
    return list(hilbert_prefix(sys, N).dims)


def analyze_report(p: Presentation, max_degree: int = 5, ext_bounds: Tuple[int, int] = (4, 4),
                   budget: int = DEFAULT_BUDGET, cap: int = 20000) -> Dict:
    rep = _empty(p, "analyze")
    shape_ok = check_shape(p).valid
    cert = certify_pbw_basis(p) if shape_ok else None
    flags = _classify_into(rep, p, cert)
    if flags is None:
        return rep
    names = p.gens
    rep["pbw"] = {
        "certified": cert.certified,
        "obstructions": cert.obstruction_count,
        "overlap": _word(names, cert.overlap_word) if cert.overlap_word else None,
        "witness": cert.witness.format(names) if cert.witness is not None else None,
        "rules": cert.system.rules_table(),
    }
    if cert.certified:
        k = cert.obstruction_count
        rep["summary"].append(f"PBW basis: CERTIFIED ({k} overlap{'' if k == 1 else 's'} resolved)")
    else:
        rep["summary"].append(
            f"PBW basis: REFUTED (overlap {rep['pbw']['overlap']} leaves {rep['pbw']['witness']})")
        rep["notes"].append("the standard monomials are linearly dependent, so this is not a skew PBW "
                            "extension; the Koszul verdict refers to the pre-Koszul presentation itself")

    b0 = homogeneous_version(p)
    rep["s_counts"] = list(compute_S(b0, max_degree).counts)
    verdict = koszul_verdict(p, ext_bounds, cap)
    rep["koszul"] = {
        "verdict": verdict.kind,
        "homogeneous": verdict.homogeneous,
        "via": verdict.via,
        "degree": list(verdict.degree) if verdict.degree else None,
        "checked_to": list(verdict.checked_to) if verdict.checked_to else None,
    }
    rep["summary"].append(_koszul_line(verdict))
    table = verdict.ext or ext_table(b0, ext_bounds[0], ext_bounds[1], cap, budget)
    rep["ext"] = _ext_block(table)
    rep["pairing"] = hilbert_pairing_test(b0, max_degree, budget)
    rep["hilbert"] = {
        "algebra": _filtered_dims(p, max_degree, budget),
        "homogeneous_version": list(hilbert_prefix(prepare(b0, max_degree + 1, budget), max_degree).dims),
        "valid_to": max_degree,
    }
    dims = rep["hilbert"]["algebra"]
    rep["summary"].append("Hilbert prefix: " + (", ".join(map(str, dims)) if dims else "algebra is zero"))
    return rep


def _deformation_block(d: DeformationReport, p: Presentation) -> Dict:
    names = p.gens
    data = d.data
    return {
        "cond_I": d.cond_I,
        "cond_J": d.cond_J,
        "B_koszul_certified": d.B_koszul_certified,
        "verdict": d.verdict,
        "trivial": d.trivial,
        "gr_hilbert_match": d.gr_hilbert_match[0],
        "checked_to": d.gr_hilbert_match[1],
        "gr_dims": list(d.gr_dims),
        "B_dims": list(d.B_dims),
        "B_relators": d.B.format_relators(),
        "alpha": [a.format(names) for a in data.alpha] if data.alpha is not None else None,
        "beta": [_q(b) for b in data.beta] if data.beta is not None else None,
    }


def deform_report(p: Presentation, max_degree: int = 5, budget: int = DEFAULT_BUDGET) -> Dict:
    rep = _empty(p, "deform")
    _classify_into(rep, p)
    d = deformation_verdict(p, max_degree, budget)
    rep["deformation"] = _deformation_block(d, p)
    mark = lambda b: YES if b else NO  # noqa: E731
    rep["summary"].append(
        f"(I) {mark(d.cond_I)}  (J) {mark(d.cond_J)}  B certified {mark(d.B_koszul_certified)}  -> {d.verdict}"
        + (" (trivial: P = R)" if d.trivial else ""))
    rep["summary"].append(
        f"Gr(A) vs B Hilbert prefix to degree {d.gr_hilbert_match[1]}: "
        f"{'match' if d.gr_hilbert_match[0] else 'MISMATCH'} "
        f"({', '.join(map(str, d.gr_dims))} vs {', '.join(map(str, d.B_dims))})")
    return rep


# -- text rendering ---------------------------------------------------------

def render_text(rep: Dict) -> str:
    out = [f"algebra {rep['algebra']}  (generators {', '.join(rep['generators'])})"]
    if rep["parameters"]:
        out.append("parameters: " + ", ".join(f"{k}={v}" for k, v in rep["parameters"].items()))
    for r in rep["relators"]:
        out.append(f"  relator  {r}")
    shape = rep["shape"]
    if shape is not None:
        for d in shape["diagnostics"]:
            out.append(f"  [{d['code']}] {d['message']}")
        for pair in shape["pairs"]:
            lin = " ".join(f"{v}" for v in pair["linear"])
            out.append(f"  pair {pair['lead']}: c = {pair['c']}, linear = ({lin}), constant = {pair['constant']}")
    f = rep["flags"]
    if f is not None:
        marks = "  ".join(f"{k} {YES if f[k] else NO}" for k in ("C", "B", "P", "QC", "SC"))
        out.append("flags: " + marks)
        out.append(f"pre-Koszul: {'yes' if f['pre_koszul'] else 'no'} "
                   f"(homogeneous: {'yes' if f['homogeneous_pre_koszul'] else 'no'}); "
                   f"basis certified: {f['basis_certified']}")
    if rep["pbw"] is not None:
        for rule in rep["pbw"]["rules"]:
            out.append(f"  rule  {rule}")
    if rep["s_counts"] is not None:
        out.append("|S^(m)|: " + ", ".join(map(str, rep["s_counts"])))
    if rep["ext"] is not None:
        e = rep["ext"]
        out.append(f"Ext^(i,j) of the homogeneous version (trusted: {'yes' if e['trusted'] else 'no'}):")
        for i, row in enumerate(e["dims"]):
            out.append(f"  i={i}: " + " ".join("?" if v is None else str(v) for v in row))
    if rep["pairing"] is not None:
        out.append(f"Hilbert pairing test: {'pass' if rep['pairing'] else 'FAIL'}")
    if rep["hilbert"] is not None:
        h = rep["hilbert"]
        out.append("homogeneous version dims: " + ", ".join(map(str, h["homogeneous_version"])))
    if rep["deformation"] is not None:
        d = rep["deformation"]
        if d["alpha"] is not None:
            out.append("alpha: " + "; ".join(d["alpha"]) + "   beta: " + "; ".join(d["beta"]))
    out.extend(rep["summary"])
    for note in rep["notes"]:
        out.append(f"note: {note}")
    return "\n".join(out) + "\n"


# -- classification tables ------------------------------------------------------

TABLE_COLUMNS = ("C", "B", "P", "QC", "SC")


def table_rows(presentations: Sequence[Presentation]) -> List[Dict]:
    rows = []
    for p in presentations:
        shape = check_shape(p)
        row = {"name": p.name, "valid": shape.valid}
        if shape.valid:
            marks = classify_subclasses(p, shape).marks()
            row.update(zip(TABLE_COLUMNS, marks))
        else:
            row.update(dict.fromkeys(TABLE_COLUMNS))
        rows.append(row)
    return rows


def table_report(selector: str, rows: List[Dict]) -> Dict:
    return {"tool": "skewpbw", "version": __version__, "command": "table", "corpus": selector, "rows": rows}


def render_table(rows: List[Dict]) -> str:
    width = max([len("algebra")] + [len(r["name"]) for r in rows]) + 2
    out = ["algebra".ljust(width) + "  ".join(c.ljust(2) for c in TABLE_COLUMNS)]
    for r in rows:
        if not r["valid"]:
            out.append(r["name"].ljust(width) + "(not a skew PBW presentation)")
            continue
        out.append(r["name"].ljust(width) + "  ".join((YES if r[c] else NO).ljust(2) for c in TABLE_COLUMNS))
    return "\n".join(out) + "\n"


def expectation_text(rows: List[Dict]) -> str:
    out = ["# algebra " + " ".join(TABLE_COLUMNS)]
    for r in rows:
        cells = ["-" if r[c] is None else ("Y" if r[c] else "n") for c in TABLE_COLUMNS]
        out.append(" ".join([r["name"]] + cells))
    return "\n".join(out) + "\n"


def parse_expectation(text: str) -> Dict[str, Tuple[str, ...]]:
    expected = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 1 + len(TABLE_COLUMNS) or any(c not in ("Y", "n", "-") for c in parts[1:]):
            raise ValueError(f"expectation line {lineno}: expected 'name' followed by {len(TABLE_COLUMNS)} of Y/n/-")
        expected[parts[0]] = tuple(parts[1:])
    return expected


def compare_expectation(rows: List[Dict], expected: Dict[str, Tuple[str, ...]]) -> List[str]:
    """Differences as human-readable lines; empty when everything matches."""
    diffs = []
    got = {}
    for r in rows:
        got[r["name"]] = tuple("-" if r[c] is None else ("Y" if r[c] else "n") for c in TABLE_COLUMNS)
    for name, cells in expected.items():
        if name not in got:
            diffs.append(f"{name}: expected row missing from output")
            continue
        for col, want, have in zip(TABLE_COLUMNS, cells, got[name]):
            if want != have:
                diffs.append(f"{name} {col}: expected {want}, got {have}")
    for name in got:
        if name not in expected:
            diffs.append(f"{name}: row not in expectation file")
    return diffs


def schema(name: str = "report") -> Dict:
    """JSON schema for ``report`` (classify/analyze/deform) or ``table`` output."""
    text = resources.files(__package__).joinpath("schemas", f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
