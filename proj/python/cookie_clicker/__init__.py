"""Cookie Clicker purchase-scheduling solvers.

Instances, strategies and certificates are plain dicts in the same JSON
shape the `cookie` CLI reads. Numbers may be JSON numbers or "p/q" strings;
pass exact=True to solve in rational arithmetic.
"""

import json

from . import _core
from ._core import InputError, SolverError

__all__ = [
    "InputError",
    "SolverError",
    "solve",
    "simulate",
    "analyze",
    "sweep",
    "oracle",
    "reduce",
    "verify",
    "decide_discrete",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def solve(instance, method="tuple-dp", *, exact=False, seed=0, iterations=2000, validate=False, stats=False):
    """Solution dict: method, optimal, total_time, strategy, labels."""
    return json.loads(_core.solve(_dump(instance), method, exact, seed, iterations, validate, stats))


def simulate(instance, purchases, *, exact=False):
    """Timeline of a 0-based purchase list."""
    return json.loads(_core.simulate(_dump(instance), list(purchases), exact))


def analyze(instance, *, exact=False):
    return json.loads(_core.analyze(_dump(instance), exact))


def sweep(instance, r_max, *, exact=False):
    """Best time for each item-1 prefix length 0..r_max (two fixed-cost items)."""
    return json.loads(_core.sweep(_dump(instance), r_max, exact))


def oracle(instance, *, budget=10_000_000):
    """Exhaustive exact optimum."""
    return json.loads(_core.oracle(_dump(instance), budget))


def reduce(kind, source):
    """Reduction certificate; kind is partition-to-rate, partition-to-initial,
    3partition-to-discrete or m-to-r."""
    return json.loads(_core.reduce(kind, _dump(source)))


def verify(certificate, *, budget=10_000_000):
    return json.loads(_core.verify(_dump(certificate), budget))


def decide_discrete(instance, *, budget=10_000_000):
    return json.loads(_core.decide_discrete(_dump(instance), budget))
