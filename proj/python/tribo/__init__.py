"""Exact Tribonacci-type sequences, addition formulas and identity certification."""

import json
from importlib import resources

from ._tribo import (
    CorpusError,
    DegenerateOffsets,
    ParseError,
    basis_decomposition,
    canonical,
    fast_term,
    matrix_power_term,
    multiplications,
    parse_error_position,
    term,
    term_range,
)
from . import _tribo

__all__ = [
    "CorpusError",
    "DegenerateOffsets",
    "ParseError",
    "basis_decomposition",
    "canonical",
    "certify",
    "corpus",
    "derive",
    "fast_term",
    "fuzz",
    "matrix_power_term",
    "multiplications",
    "parse_error_position",
    "term",
    "term_range",
]


def derive(basis, offsets, as_json=False):
    """Addition formula for W(r+s) over three offsets in the T or K basis."""
    o1, o2, o3 = offsets
    if as_json:
        return json.loads(_tribo.derive_json(basis, o1, o2, o3))
    return _tribo.derive_text(basis, o1, o2, o3)


def certify(text):
    """Certificate for an identity, as a dict."""
    return json.loads(_tribo.certify_json(text))


def fuzz(text, trials=1000, rng_seed=0):
    rep = _tribo.fuzz(text, trials, rng_seed)
    if rep["failure"] is not None:
        rep["failure"] = json.loads(rep["failure"])
    return rep


def corpus(path=None):
    """Bundled identities as (id, source, text) tuples."""
    if path is None:
        path = resources.files(__name__) / "corpus.txt"
    return _tribo.corpus_entries(str(path))
