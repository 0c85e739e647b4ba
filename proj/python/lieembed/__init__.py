"""Exact structure of real Lie algebras: roots, Dynkin types, embeddings, maximal compacts.

Thin wrappers over the C++ core; results come back as plain dicts.
"""

import json

from . import _core
from ._core import LieEmbedError  # noqa: F401

__all__ = ["analyze", "embed", "roots", "dynkin", "vf_brackets", "vf_invariants", "verify", "LieEmbedError"]


def analyze(input):
    return json.loads(_core.analyze(input))


def embed(input, mode, subspace, route="split", positive_on="", budget=10000, seed=0):
    return json.loads(_core.embed(input, mode, subspace, route, positive_on, budget, seed))


def roots(input, cartan, ambient="", positivity="lex"):
    return json.loads(_core.roots(input, cartan, ambient, positivity))


def dynkin(input, cartan, ambient="", positivity="lex"):
    return json.loads(_core.dynkin(input, cartan, ambient, positivity))


def vf_brackets(input, pair=""):
    return json.loads(_core.vf_brackets(input, pair))


def vf_invariants(input, fields):
    return json.loads(_core.vf_invariants(input, fields))


def verify(corpus, budget=10000, seed=0):
    """Returns (ok, report)."""
    ok, report = _core.verify(corpus, budget, seed)
    return ok, json.loads(report)
