"""Idempotents, minimal left ideals and cancellativity in finite groupoids."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field

import numpy as np

from ._parallel import ordered_map
from .algebras import FiniteGroupoid

__all__ = [
    "SemigroupReport", "NotAssociative", "idempotent_power", "find_idempotents", "ideal_structure",
    "weak_left_cancellativity", "semigroup_corpus", "canonical_form", "named_semigroup",
]


class NotAssociative(ValueError):
    pass


def _require_assoc(g):
    w = g.associativity_witness()
    if w is not None:
        x, y, z = w
        raise NotAssociative(f"({x}*{y})*{z} != {x}*({y}*{z})")


def idempotent_power(g: FiniteGroupoid, x: int) -> int:
    """The idempotent of the cyclic subsemigroup generated by x."""
    _require_assoc(g)
    seen = {}
    powers = []
    p, k = x, 1
    while p not in seen:
        seen[p] = k
        powers.append(p)
        p = g(p, x)
        k += 1
    index, period = seen[p], k - seen[p]
    # x^j is idempotent for the multiple j of the period with j >= index
    j = period * -(-index // period)
    return powers[j - 1]


def find_idempotents(g: FiniteGroupoid) -> set:
    idem = {e for e in range(g.size) if g(e, e) == e}
    if not idem:
        warnings.warn("no idempotents: the operation is necessarily non-associative", stacklevel=2)
    return idem


@dataclass
class SemigroupReport:
    idempotents: list
    is_associative: bool
    minimal_left_ideals: list = field(default_factory=list)
    smallest_ideal: list = field(default_factory=list)
    max_left_solutions: int = 0

    def to_json(self):
        return dict(self.__dict__)


def _left_ideal(g, x):
    return frozenset({x} | {g(s, x) for s in range(g.size)})


def ideal_structure(g: FiniteGroupoid) -> SemigroupReport:
    """Principal left ideals S^1 x, the minimal ones, and the kernel."""
    _require_assoc(g)
    principal = {_left_ideal(g, x) for x in range(g.size)}
    minimal = sorted((sorted(L) for L in principal if not any(M < L for M in principal)))
    kernel = sorted(set().union(*map(set, minimal)))
    return SemigroupReport(sorted(find_idempotents(g)), True, minimal, kernel,
                           weak_left_cancellativity(g)["max_solutions"])


def two_sided_kernel(g: FiniteGroupoid) -> set:
    """Intersection of all principal two-sided ideals S^1 a S^1."""
    n = g.size
    out = set(range(n))
    for a in range(n):
        left = {a} | {g(s, a) for s in range(n)}
        ideal = left | {g(y, t) for y in left for t in range(n)}
        out &= ideal
    return out


def weak_left_cancellativity(g: FiniteGroupoid) -> dict:
    """Solution counts of a*x = b.  Finite groupoids satisfy the weak
    condition trivially; the maximum count is the informative number."""
    M = g.mul
    counts = np.zeros((g.size, g.size), dtype=np.int64)
    for a in range(g.size):
        counts[a] = np.bincount(M[a], minlength=g.size)
    solvable = counts[counts > 0]
    worst = np.unravel_index(int(np.argmax(counts)), counts.shape)
    top = int(solvable.max()) if solvable.size else 0
    return {"max_solutions": top, "worst_pair": [int(worst[0]), int(worst[1])],
            "left_cancellative": top <= 1, "weakly_left_cancellative": True}


# --------------------------------------------------------------------------
# named families and the small-order corpus


def named_semigroup(name: str) -> FiniteGroupoid:
    """``zM-mul``, ``zM-add``, ``left-zero:N``, ``right-zero:N``, ``null:N``."""
    kind, _, arg = name.partition(":")
    if kind.startswith("z") and kind.endswith("-mul"):
        m = int(kind[1:-4])
        i = np.arange(m)
        return FiniteGroupoid(i[:, None] * i[None, :] % m, name)
    if kind.startswith("z") and kind.endswith("-add"):
        m = int(kind[1:-4])
        i = np.arange(m)
        return FiniteGroupoid((i[:, None] + i[None, :]) % m, name)
    n = int(arg)
    i = np.arange(n)
    if kind == "left-zero":
        return FiniteGroupoid(np.repeat(i[:, None], n, axis=1), name)
    if kind == "right-zero":
        return FiniteGroupoid(np.repeat(i[None, :], n, axis=0), name)
    if kind == "null":
        return FiniteGroupoid(np.zeros((n, n), dtype=np.int64), name)
    raise ValueError(f"unknown semigroup family {name!r}")


def _associative_tables(n, prefix):
    """All associative n x n tables whose first cells equal ``prefix``."""
    cells = n * n
    table = [-1] * cells
    for i, v in enumerate(prefix):
        table[i] = v

    def consistent(upto):
        # every triple whose products are all defined must associate
        for x in range(n):
            for y in range(n):
                xy = table[x * n + y]
                if xy < 0:
                    continue
                for z in range(n):
                    yz = table[y * n + z]
                    if yz < 0:
                        continue
                    a, b = table[xy * n + z], table[x * n + yz]
                    if a >= 0 and b >= 0 and a != b:
                        return False
        return True

    out = []

    def fill(i):
        if i == cells:
            out.append(tuple(table))
            return
        for v in range(n):
            table[i] = v
            if consistent(i):
                fill(i + 1)
        table[i] = -1

    if consistent(len(prefix)):
        fill(len(prefix))
    return out


def canonical_form(table, n):
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        # relabel x -> perm[x]
        t = [0] * (n * n)
        for x in range(n):
            for y in range(n):
                t[perm[x] * n + perm[y]] = perm[table[x * n + y]]
        t = tuple(t)
        if best is None or t < best:
            best = t
    return best


def semigroup_corpus(n: int, up_to_isomorphism: bool = True):
    """Every associative table of order n, optionally one per isomorphism
    class.  Work is split over first-row prefixes; merge order is fixed."""
    prefixes = list(itertools.product(range(n), repeat=min(n, 2)))
    parts = ordered_map(lambda pre: _associative_tables(n, pre), prefixes)
    tables = [t for part in parts for t in part]
    if up_to_isomorphism:
        tables = sorted({canonical_form(t, n) for t in tables})
    return [FiniteGroupoid(np.array(t).reshape(n, n), f"S{n}#{i}") for i, t in enumerate(tables)]
