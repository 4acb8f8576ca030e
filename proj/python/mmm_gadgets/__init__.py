"""Gadget constructions and lemma checks for minimum maximal matching.

Entities are exchanged as JSON documents of schema ``mmm-gadgets/1``; the
helpers below parse them into dicts. Rationals stay "num/den" strings and can
be turned into ``fractions.Fraction`` with :func:`rational`.
"""

import json
from fractions import Fraction

from . import _core
from ._core import SCHEMA, BudgetExceeded, InternalError, lemma_ids, run_experiment, solve, to_dot

__all__ = [
    "SCHEMA",
    "BudgetExceeded",
    "InternalError",
    "blowup",
    "build_gadget",
    "fractional_matching",
    "generate_ulc",
    "lemma_ids",
    "rational",
    "run_experiment",
    "solve",
    "to_dot",
    "verify_lemma",
]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def rational(text):
    """Parse a "num/den" string."""
    return Fraction(text)


def generate_ulc(num_vars=3, num_colors=2, xi="0", topology="cycle", p_edge=0.5, seed=1):
    return json.loads(_core.generate_ulc(num_vars, num_colors, str(xi), topology, p_edge, seed))


def build_gadget(instance, epsilon="1/4", flavor="extended"):
    return json.loads(_core.build_gadget(_text(instance), str(epsilon), flavor))


def fractional_matching(instance, epsilon="1/4", strategy="hamiltonian"):
    return json.loads(_core.fractional_matching(_text(instance), str(epsilon), strategy))


def blowup(instance, epsilon="1/4", rho="1/2"):
    return json.loads(_core.blowup(_text(instance), str(epsilon), str(rho)))


def verify_lemma(lemma, **params):
    """Run one lemma pipeline; keyword arguments override the Setup A defaults."""
    for key in ("epsilon", "xi", "rho"):
        if key in params:
            params[key] = str(params[key])
    return json.loads(_core.verify_lemma(lemma, **params))
