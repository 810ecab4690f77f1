"""Products of involutions and skew-involutions in symplectic groups."""

import json

from ._core import (
    BudgetExceeded,
    Error,
    NotSymplectic,
    ParseError,
    UnsupportedField,
    class_table_csv,
    run_suite,
    suite_names,
    symplectic_group_order,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "Error",
    "NotSymplectic",
    "ParseError",
    "UnsupportedField",
    "class_table_csv",
    "classify",
    "element",
    "run_suite",
    "suite_names",
    "symplectic_group_order",
    "wall",
]


def _field(p):
    return {"kind": "rational"} if p is None else {"kind": "prime", "p": p}


def element(rows, p=None, gram=None):
    """Element JSON for a matrix over GF(p), or over Q when p is None.

    Entries are integers, or strings such as "3/4" over Q. The form is the
    standard one unless a Gram matrix is given.
    """
    rows = [list(r) for r in rows]
    space = {"dim": len(rows), "gram": "standard"}
    if gram is not None:
        space["gram"] = {"field": _field(p), "rows": [list(r) for r in gram]}
    return {"space": space, "matrix": {"field": _field(p), "rows": rows}}


def classify(rows, p=None, gram=None, seed=1, budget=None, oracle=True):
    """Classification report as a dict."""
    kwargs = {"seed": seed, "oracle": oracle}
    if budget is not None:
        kwargs["budget"] = budget
    return json.loads(_core.classify_json(json.dumps(element(rows, p, gram)), **kwargs))


def wall(rows, p=None, gram=None):
    """Wall form report as a dict."""
    return json.loads(_core.wall_json(json.dumps(element(rows, p, gram))))
