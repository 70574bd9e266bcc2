"""Khovanov homology and Jones superpolynomials of knot diagrams."""

import json

from ._core import (
    Diagram,
    KhovaError,
    compute_json,
    extended_jones,
    jones,
    parse_braid_word,
    parse_pd_code,
    verify_table_json,
)

__all__ = [
    "Diagram",
    "KhovaError",
    "braid",
    "compute",
    "extended_jones",
    "jones",
    "parse_braid_word",
    "parse_pd_code",
    "pd",
    "verify_table",
]


def braid(word, strands=None):
    """Closure of a braid word such as "1,1,1" or [1, -2, 1, -2]."""
    if not isinstance(word, str):
        word = ",".join(str(int(x)) for x in word)
    if strands is None:
        letters = [abs(int(t)) for t in word.replace(",", " ").split()]
        strands = max(letters, default=0) + 1
    return parse_braid_word(word, strands)


def pd(text):
    """Diagram from PD text, e.g. "X(1,4,2,5)+ X(3,6,4,1)+ X(5,2,6,3)+"."""
    return parse_pd_code(text)


def compute(diagram, flavor="both", marked=None, field="q", max_crossings=20):
    """Full report as a dict: homology tables, superpolynomials and checks."""
    return json.loads(compute_json(diagram, flavor, marked, field, max_crossings))


def verify_table(path, jobs=1):
    """Batch report for a newline-delimited JSON knot table."""
    return json.loads(verify_table_json(path, jobs))
