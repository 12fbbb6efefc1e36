"""Exact Schur-function calculus and Thom polynomials of singularities.

Thin wrapper over the compiled core: JSON payloads are decoded into plain
Python structures, partitions become tuples of ints.
"""

import json

from . import _core

ThomschurError = _core.ThomschurError
UnsupportedSingularity = _core.UnsupportedSingularity
ParseError = _core.ParseError


def _decode(expansion_json):
    doc = json.loads(expansion_json)
    terms = {tuple(t["partition"]): int(t["coeff"]) for t in doc["terms"]}
    meta = {k: doc[k] for k in ("r", "name") if k in doc}
    return terms, meta


def compute(target, r):
    """Closed-form Thom polynomial as {partition_tuple: coeff}."""
    return _decode(_core.compute(target, r))[0]


def verify(target, r):
    """(all_pass, [{equation_label, status, residual}, ...])."""
    ok, report = _core.verify(target, r)
    return ok, json.loads(report)


def solve(target, r, candidates="default"):
    """Solve the restriction system; returns {partition_tuple: coeff}."""
    expansion, _heuristic = _core.solve(target, r, candidates)
    return _decode(expansion)[0]


def table(kind, rows):
    """Coefficient table as a list of rows of ints."""
    return [[int(v) for v in row] for row in _core.table(kind, rows)]


def schur(sequence, at):
    """String rendering of the Schur polynomial of a sequence at an alphabet."""
    return _core.schur(list(sequence), at)


def complete(i, at):
    """String rendering of the complete function S_i at an alphabet."""
    return _core.complete(i, at)


def evaluate(terms, at):
    """Evaluate {partition_tuple: coeff} at a virtual alphabet; string result."""
    doc = {"terms": [{"partition": list(p), "coeff": str(c)}
                     for p, c in sorted(terms.items())]}
    return _core.eval_expansion(json.dumps(doc), at)


def selftest(golden_dir):
    """(all_pass, [criterion reports])."""
    ok, report = _core.selftest(golden_dir)
    return ok, json.loads(report)
