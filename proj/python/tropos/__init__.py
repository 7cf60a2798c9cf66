"""Exact tropical total positivity: classification, factorization, spectra,
Plucker vectors and planar networks over the max-plus semiring and its
series lift.

Matrices are nested lists; scalars may be ints, "p/q" strings, decimal
strings, or "-inf".
"""

import json

try:
    from . import _tropos
except ImportError:  # in-tree build: the extension sits next to this package
    import _tropos

TroposError = _tropos.TroposError
permanent = _tropos.permanent
minor_class = _tropos.minor_class
valuation = _tropos.valuation
det = _tropos.det
verify = _tropos.verify


def _matrix_doc(entries):
    return {"rows": len(entries), "cols": len(entries[0]) if entries else 0, "entries": entries}


def run(command, document=None, *, cap=9, seed=0, lift=None, strict=False):
    """Runs a command on a JSON-compatible document. Returns (status, result)."""
    text = None if document is None else json.dumps(document)
    status, out = _tropos.run(command, text, cap, seed, lift, strict)
    return status, json.loads(out)


def classify(entries, **kw):
    return run("classify", _matrix_doc(entries), **kw)[1]


def factor(entries):
    status, doc = run("factor", _matrix_doc(entries))
    if status != 0:
        raise TroposError(doc["error"]["message"])
    return doc


def spectrum(entries, **kw):
    return run("spectrum", _matrix_doc(entries), **kw)[1]


def plucker(entries, **kw):
    return run("plucker", _matrix_doc(entries), **kw)[1]


def stiefel_invert(vector):
    status, doc = run("stiefel-invert", vector)
    return doc


def network_weight(network):
    return run("network-weight", network)[1]


__all__ = [
    "TroposError",
    "classify",
    "det",
    "factor",
    "minor_class",
    "network_weight",
    "permanent",
    "plucker",
    "run",
    "spectrum",
    "stiefel_invert",
    "valuation",
    "verify",
]
