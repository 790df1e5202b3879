"""Exact Green-ring and projective class-ring computations for small Hopf algebras.

Thin wrapper over the C++ driver: every call returns the parsed JSON document
the command-line tool would print with ``--format json``.
"""

import json

from ._core import SCHEMA_VERSION, verify_targets
from ._core import run as _run

__all__ = ["SCHEMA_VERSION", "HopfclassError", "run", "verify", "fuse", "table", "verify_targets"]


class HopfclassError(RuntimeError):
    """Raised for usage errors (unknown target, bad family or label)."""

    def __init__(self, document):
        super().__init__(document.get("error", "usage error"))
        self.document = document


def run(command, *args, family="tensor-taft", n=3, p=0, seed=0, jobs=1, mode="", computed=False):
    code, out = _run(command, list(args), family, n, str(p), seed, jobs, "json", mode, computed)
    doc = json.loads(out)
    if code == 2:
        raise HopfclassError(doc)
    return doc


def verify(target, **kwargs):
    """Run one named check; the document's "status" is "pass" or "fail"."""
    return run("verify", target, **kwargs)


def fuse(a, b, mode="both", **kwargs):
    """Decompose a (x) b.  Returns {label: multiplicity}; raises if the two modes disagree."""
    doc = run("fuse", a, b, mode=mode, **kwargs)
    if doc["status"] != "pass":
        raise AssertionError(doc["reports"])
    result = doc["result"]
    terms = result.get("closed_form", result.get("computed"))
    return {t["label"]: t["mult"] for t in terms}


def table(mode="closed", **kwargs):
    """The fusion table as {"basis": [...], "entries": [...]}."""
    return run("table", mode=mode, **kwargs)["result"]["table"]
