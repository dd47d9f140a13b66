"""Spec files, analysis reports and the randomized census behind the CLI.

A spec file is a JSON object::

    {"n": 4, "theta": [0, 2], "generators": ["z^3+z^2+z+1+v*(z+3)", [[2, 2], [0, 0], [2, 0], [0, 0]]]}

``theta`` is a pair [a, b] meaning a + vb (a string such as "2v" is also
read), and each generator is either an expression or a list of [a, b]
coefficient pairs in ascending powers of z.  Reports are plain dicts that
serialise with sorted keys; see ``docs/report_schema.md``.
"""

import json
from dataclasses import dataclass

from .oracle import (DEFAULT_LIMIT, OracleLimitExceeded, brute_force_towers, enumerate_code,
                     verify_spanning_minimality)
from .parser import ParseError, format_poly, parse_poly, parse_relem
from .poly import MAX_N, PolyR, z2_coeffs, z2_deg, z2_str
from .rank import (NegativeShiftCount, compute_cardinality, compute_rank,
                   layered_log2_size, minimal_spanning_set, shift_counts)
from .relations import describe, verify_relations
from .ring import RElem, Theta
from .sampling import make_rng, mixed, permuted, random_code, with_redundant
from .structure import (CodeSpec, canonicalize, degree_violations, module_log2_size,
                        staged_violations)

REPORT_VERSION = 1


class SpecError(ValueError):
    """A spec file that is well-formed JSON but not a valid code description."""


@dataclass(frozen=True)
class SpecFile:
    n: int
    theta: Theta
    generators: tuple   # PolyR

    def code(self):
        return CodeSpec(self.n, self.theta, self.generators)


def read_theta(value):
    """[a, b], {"a": .., "b": ..} or an expression; raises ChainRingError for chain values."""
    if isinstance(value, str):
        return Theta(parse_relem(value))
    if isinstance(value, dict):
        value = [value.get("a", 0), value.get("b", 0)]
    if (isinstance(value, (list, tuple)) and len(value) == 2
            and all(isinstance(x, int) and not isinstance(x, bool) for x in value)):
        return Theta(RElem(*value))
    raise SpecError(f"theta must be a pair [a, b] or an expression, got {value!r}")


def _read_generator(g, n, theta):
    if isinstance(g, str):
        return parse_poly(g, n, theta)
    if isinstance(g, list) and all(isinstance(c, list) and len(c) == 2 for c in g):
        coeffs = [RElem(int(a), int(b)) for a, b in g]
        # longer lists wrap around mod z^n - 1
        return PolyR.from_coeffs(coeffs, n, theta)
    raise SpecError(f"generator must be an expression or a list of [a, b] pairs, got {g!r}")


def load_spec(data):
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    missing = [k for k in ("n", "theta", "generators") if k not in data]
    if missing:
        raise SpecError(f"spec is missing {', '.join(missing)}")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_N:
        raise SpecError(f"n must be an integer in 1..{MAX_N}, got {n!r}")
    theta = read_theta(data["theta"])
    gens = data["generators"]
    if not isinstance(gens, list) or not gens:
        raise SpecError("generators must be a non-empty list")
    return SpecFile(n, theta, tuple(_read_generator(g, n, theta) for g in gens))


def load_spec_file(path):
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError(f"{path}: not valid JSON ({exc})") from None
    return load_spec(data)


def dump_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _bits(f):
    return z2_coeffs(f, z2_deg(f) + 1) if f else []


def analyze(spec, oracle=False, limit=DEFAULT_LIMIT):
    """Full report for the code generated by ``spec``.

    ``report["violations"]`` lists every disagreement between the closed-form
    results and the code itself; an empty list means all checks passed.
    Raises OracleLimitExceeded when the oracle is requested on a code that is
    too large.
    """
    code = spec.code()
    c = canonicalize(code)
    violations = []

    table = c.table()
    report = {
        "version": REPORT_VERSION,
        "n": spec.n,
        "theta": [spec.theta.value.a, spec.theta.value.b],
        "canonical": {name: _bits(f) for name, f in table.items()},
        "canonical_text": {name: z2_str(f) for name, f in table.items()},
        "generators": [format_poly(g) for g in c.generators()],
        "degrees": dict(zip(("s1", "s2", "s3", "s4"), c.degrees())),
    }

    for problem in staged_violations(c):
        violations.append(f"staging condition {problem}")
    for name in degree_violations(c):
        violations.append(f"degree bound on {name}")

    counts = shift_counts(c)
    report["shift_counts"] = counts
    try:
        report["rank"] = compute_rank(c)
        span = list(minimal_spanning_set(c))
    except NegativeShiftCount as exc:
        report["rank"] = None
        span = None
        violations.append(str(exc))
    report["spanning_set"] = None if span is None else [format_poly(w) for w in span]

    report["log2_card"] = compute_cardinality(c)
    report["log2_size"] = module_log2_size(code)
    report["log2_size_from_towers"] = layered_log2_size(c)
    if report["log2_card"] != report["log2_size"]:
        violations.append(f"cardinality formula gives 2^{report['log2_card']} "
                          f"but the code has 2^{report['log2_size']} words")

    rel = verify_relations(c)
    report["relations"] = [
        {"name": r.name, "reading": r.reading, "status": r.status, "statement": r.statement,
         "divisor": z2_str(r.divisor) if r.divisor is not None else None,
         "dividend": z2_str(r.dividend) if r.dividend is not None else None,
         "failed_step": r.failed_step}
        for r in rel.results
    ]
    violations.extend(f"relation {describe(r)}" for r in rel.failures())

    if oracle:
        words = enumerate_code(code, limit)
        section = {"size": len(words), "log2_size": len(words).bit_length() - 1}
        if section["size"] != 1 << report["log2_card"]:
            violations.append(f"oracle counts {section['size']} words, formula says 2^{report['log2_card']}")
        bf = brute_force_towers(words)
        section["towers"] = [z2_str(g) for g in bf]
        section["towers_match"] = bf == (c.g11, c.g22, c.g33, c.g44)
        if not section["towers_match"]:
            violations.append("towers differ from the brute-force layers")
        if span is not None:
            verdict = verify_spanning_minimality(span, words, limit)
            section.update(spans=verdict.spans, minimal=verdict.minimal,
                           redundant_index=verdict.redundant_index)
            if not verdict.spans:
                violations.append("spanning set does not span the code")
            if not verdict.minimal:
                violations.append(f"spanning set element {verdict.redundant_index} is redundant")
        report["oracle"] = section

    report["violations"] = violations
    return report


def format_text(report):
    lines = [f"n = {report['n']}, theta = {report['theta'][0]}+{report['theta'][1]}v"]
    for name, text in report["canonical_text"].items():
        lines.append(f"  {name} = {text}")
    lines.append("  degrees s1..s4 = " + ", ".join(str(v) for v in report["degrees"].values()))
    lines.append("  generators:")
    lines.extend(f"    g{i} = {g}" for i, g in enumerate(report["generators"], start=1))
    lines.append(f"rank = {report['rank']}")
    lines.append(f"log2 |C| (closed form) = {report['log2_card']}, "
                 f"log2 |C| (counted) = {report['log2_size']}")
    if report["spanning_set"] is not None:
        lines.append(f"spanning set ({len(report['spanning_set'])} elements):")
        lines.extend(f"    {w}" for w in report["spanning_set"])
    lines.append("relations:")
    for r in report["relations"]:
        if r["status"] == "not-applicable":
            continue
        lines.append(f"    ({r['name']}) [{r['reading']}] {r['status']}")
    if "oracle" in report:
        o = report["oracle"]
        lines.append(f"oracle: {o['size']} words, towers match: {o['towers_match']}"
                     + (f", spans: {o['spans']}, minimal: {o['minimal']}" if "spans" in o else ""))
    if report["violations"]:
        lines.append("VIOLATIONS:")
        lines.extend(f"  - {v}" for v in report["violations"])
    else:
        lines.append("all checks passed")
    return "\n".join(lines) + "\n"


# --- census -------------------------------------------------------------------

CENSUS_COLUMNS = ("samples", "oracle_skipped", "card_formula_ok", "counted_size_ok",
                  "rank_set_ok", "negative_shift", "relation_failures", "staging_failures",
                  "unstable_canonical", "s3_above_s1", "s4_above_stilde")


def census_sample(seed, n, theta, index):
    """The reproducible random code behind census row (n, theta), sample ``index``."""
    rng = make_rng(seed, n, theta, index)
    return rng, random_code(rng, n, theta)


def check_sample(seed, n, theta, index, limit=DEFAULT_LIMIT):
    """Counter increments and tagged findings for one census sample."""
    rng, spec = census_sample(seed, n, theta, index)
    tag = f"seed={seed} n={n} theta={theta} sample={index}"
    hits = {"samples": 1}
    findings = []

    def flag(column, message=None):
        hits[column] = hits.get(column, 0) + 1
        if message:
            findings.append(f"{tag}: {message}")

    c = canonicalize(spec)
    if any(canonicalize(f(rng, spec)) != c for f in (permuted, with_redundant, mixed)):
        flag("unstable_canonical", "canonical form changed under a rewrite of the generators")
    s1, s2, s3, s4 = c.degrees()
    if s3 > s1:
        flag("s3_above_s1")
    if s4 > min(s2, s3):
        flag("s4_above_stilde")
    if staged_violations(c) or degree_violations(c):
        flag("staging_failures", "canonical form breaks the staging conditions: "
             + "; ".join(staged_violations(c) + degree_violations(c)))
    fails = verify_relations(c).failures()
    if fails:
        flag("relation_failures", "; ".join(describe(r) for r in fails))
    try:
        words = enumerate_code(spec, limit)
    except OracleLimitExceeded:
        flag("oracle_skipped")
        return hits, findings
    if len(words) == 1 << compute_cardinality(c):
        flag("card_formula_ok")
    else:
        findings.append(f"{tag}: formula 2^{compute_cardinality(c)} vs {len(words)} words")
    if len(words) == 1 << layered_log2_size(c):
        flag("counted_size_ok")
    else:
        findings.append(f"{tag}: tower degrees predict 2^{layered_log2_size(c)}, found {len(words)} words")
    try:
        verdict = verify_spanning_minimality(list(minimal_spanning_set(c)), words, limit)
    except NegativeShiftCount as exc:
        flag("negative_shift", str(exc))
        return hits, findings
    if verdict.spans and verdict.minimal:
        flag("rank_set_ok")
    else:
        findings.append(f"{tag}: spanning set spans={verdict.spans} minimal={verdict.minimal}")
    return hits, findings


def census_cell(n, theta, samples, seed, limit=DEFAULT_LIMIT):
    row = dict.fromkeys(CENSUS_COLUMNS, 0)
    findings = []
    for i in range(samples):
        hits, found = check_sample(seed, n, theta, i, limit)
        for column, count in hits.items():
            row[column] += count
        findings.extend(found)
    return row, findings


def run_census(ns, thetas, samples, seed, limit=DEFAULT_LIMIT):
    """Rows keyed by (n, theta) in a fixed order, plus the findings with reproducer tags."""
    rows, findings = [], []
    for n in ns:
        for theta in thetas:
            row, found = census_cell(n, theta, samples, seed, limit)
            rows.append({"n": n, "theta": str(theta), **row})
            findings.extend(found)
    return {"rows": rows, "findings": findings, "seed": seed}


def format_census(result):
    head = ["n", "theta"] + list(CENSUS_COLUMNS)
    table = [head] + [[str(r[h]) for h in head] for r in result["rows"]]
    widths = [max(len(row[i]) for row in table) for i in range(len(head))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in table]
    lines.append(f"{len(result['findings'])} findings")
    lines.extend(f"  {f}" for f in result["findings"])
    return "\n".join(lines) + "\n"


__all__ = ["SpecFile", "SpecError", "ParseError", "load_spec", "load_spec_file", "analyze",
           "format_text", "dump_json", "run_census", "format_census", "read_theta"]
