"""Finite sums and products, finite Ramsey witness searches, Schur numbers,
and the brute-force Key Lemma verifier.

All searches are truncations of asymptotic theorems: a ``None`` result
means "no witness inside this window", nothing more.
"""

from __future__ import annotations

import csv
import io
import itertools
import operator
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ._parallel import ordered_map
from .algebras import (FinitePolyring, cyclic_group, direct_product, enumerate_distributive_ops,
                       evaluate_grid, grid_coords)
from .terms import Signature, degree, max_var, random_term, to_text

__all__ = [
    "Coloring", "GridColoring", "FSWitness", "SchurResult", "KeyLemmaReport", "KeyLemmaViolation",
    "BudgetExceeded", "fs_set", "fp_set", "schur_search", "schur_number", "schur_oracle_exhaustive",
    "schur_extension_counts", "folkman_search", "hilbert_cube_search", "simultaneous_fs_fp_search",
    "product_fs_search", "verify_key_lemma", "key_lemma_campaign", "recheck_witness",
]


class KeyLemmaViolation(AssertionError):
    """A term vanished on FS(a_0..a_d) but not at 0: degree or normalization is broken."""

    def __init__(self, message, tuple_=None):
        self.tuple = tuple_
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    pass


# --------------------------------------------------------------------------
# colorings


@dataclass(frozen=True)
class Coloring:
    """Coloring of [1..N]; ``colors[i]`` is the color of i+1."""

    colors: tuple
    r: int = 0

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        r = self.r or (max(colors) + 1 if colors else 0)
        if any(not 0 <= c < r for c in colors):
            raise ValueError("colors must lie in [0, r)")
        object.__setattr__(self, "r", r)

    @property
    def N(self):
        return len(self.colors)

    def __call__(self, x):
        return self.colors[x - 1]

    def parts(self):
        out = [[] for _ in range(self.r)]
        for x, c in enumerate(self.colors, 1):
            out[c].append(x)
        return out

    @classmethod
    def from_parts(cls, parts, N=None):
        N = N or max(max(p) for p in parts if p)
        colors = [None] * N
        for c, part in enumerate(parts):
            for x in part:
                colors[x - 1] = c
        if None in colors:
            raise ValueError("parts do not cover [1..N]")
        return cls(tuple(colors), len(parts))

    @classmethod
    def constant(cls, N):
        return cls((0,) * N, 1)

    @classmethod
    def modular(cls, k, N):
        return cls(tuple(x % k for x in range(1, N + 1)), k)

    @classmethod
    def parity(cls, N):
        return cls.modular(2, N)

    @classmethod
    def random(cls, r, N, seed=0):
        rng = np.random.default_rng(seed)
        return cls(tuple(int(c) for c in rng.integers(0, r, size=N)), r)

    @classmethod
    def from_csv(cls, text):
        rows = [row for row in csv.reader(io.StringIO(text)) if row and not row[0].startswith("#")]
        if rows and not rows[0][0].strip().lstrip("-").isdigit():
            rows = rows[1:]
        pairs = {int(a): int(b) for a, b in rows}
        N = max(pairs)
        if sorted(pairs) != list(range(1, N + 1)):
            raise ValueError("CSV coloring must cover 1..N exactly")
        return cls(tuple(pairs[x] for x in range(1, N + 1)))

    @classmethod
    def from_rule(cls, rule: str, seed=0):
        """``parity:N``, ``mod:k:N``, ``const:N``, ``random:r:N`` or ``parts:1,4/2,3``."""
        kind, _, rest = rule.partition(":")
        args = rest.split(":") if rest else []
        if kind == "parity":
            return cls.parity(int(args[0]))
        if kind == "mod":
            return cls.modular(int(args[0]), int(args[1]))
        if kind == "const":
            return cls.constant(int(args[0]))
        if kind == "random":
            return cls.random(int(args[0]), int(args[1]), seed)
        if kind == "parts":
            return cls.from_parts([[int(v) for v in p.split(",")] for p in rest.split("/")])
        raise ValueError(f"unknown coloring rule {rule!r}")

    def to_json(self):
        return {"N": self.N, "r": self.r, "colors": list(self.colors)}


@dataclass(frozen=True, eq=False)
class GridColoring:
    """Coloring of the grid prod [1..N_i]; ``colors[x1-1, ..., xk-1]``."""

    colors: np.ndarray
    r: int = 0

    def __post_init__(self):
        a = np.array(self.colors, dtype=np.int64)
        a.setflags(write=False)
        object.__setattr__(self, "colors", a)
        if not self.r:
            object.__setattr__(self, "r", int(a.max()) + 1 if a.size else 0)

    @property
    def shape(self):
        return self.colors.shape

    def __call__(self, point):
        return int(self.colors[tuple(x - 1 for x in point)])

    @classmethod
    def from_rule(cls, rule: str, seed=0):
        """``sum-parity:N1xN2``, ``checkerboard:N1xN2``, ``const:...``, ``random:r:N1xN2``."""
        kind, _, rest = rule.partition(":")
        args = rest.split(":")
        shape = tuple(int(v) for v in args[-1].split("x"))
        idx = np.indices(shape) + 1
        if kind == "sum-parity":
            return cls(idx.sum(axis=0) % 2, 2)
        if kind == "checkerboard":
            # color = parity vector of the coordinates
            code = np.zeros(shape, dtype=np.int64)
            for axis in range(len(shape)):
                code = code * 2 + idx[axis] % 2
            return cls(code, 2 ** len(shape))
        if kind == "const":
            return cls(np.zeros(shape, dtype=np.int64), 1)
        if kind == "random":
            rng = np.random.default_rng(seed)
            r = int(args[0])
            return cls(rng.integers(0, r, size=shape), r)
        raise ValueError(f"unknown grid coloring rule {rule!r}")


@dataclass
class FSWitness:
    kind: str
    sequences: list
    color: int
    realized: list
    extra: dict = field(default_factory=dict)

    def to_json(self):
        return {"kind": self.kind, "sequences": self.sequences, "color": self.color,
                "realized": self.realized, **self.extra}


# --------------------------------------------------------------------------
# finite sums / products


def fs_set(seq, bound=None) -> set:
    """All sums over nonempty index subsets (each index used once)."""
    seq = list(seq)
    if not seq:
        raise ValueError("FS of an empty sequence")
    sums = set()
    for x in seq:
        new = {x} | {s + x for s in sums}
        if bound is not None:
            new = {s for s in new if s <= bound}
        sums |= new
    return sums


def fp_set(seq, op=operator.mul) -> set:
    """Ordered products x_{i0} x_{i1} ... over increasing indices,
    left-associated; ``op`` may be any binary callable (e.g. a groupoid)."""
    seq = list(seq)
    if not seq:
        raise ValueError("FP of an empty sequence")
    prods = set()
    for x in seq:
        prods |= {x} | {op(p, x) for p in prods}
    return prods


# --------------------------------------------------------------------------
# Schur


def schur_search(c: Coloring, distinct: bool = False):
    """First (x, y, color) in lexicographic order with x <= y, x+y <= N and
    {x, y, x+y} monochromatic; None if the coloring has none."""
    N = c.N
    for x in range(1, N + 1):
        for y in range(x + (1 if distinct else 0), N - x + 1):
            if c(x) == c(y) == c(x + y):
                return x, y, c(x)
    return None


@dataclass
class SchurResult:
    r: int
    N: int
    coloring: Coloring
    nodes: int

    def to_json(self):
        return {"r": self.r, "schur_number": self.N, "certificate": self.coloring.parts(), "nodes": self.nodes}


def _fits(mask, k, allow_equal=True):
    x = 1
    while 2 * x <= k:
        if mask >> x & 1 and mask >> (k - x) & 1 and (allow_equal or 2 * x != k):
            return False
        x += 1
    return True


def schur_number(r: int, budget: int | None = None, distinct: bool = False) -> SchurResult:
    """Largest N with an r-coloring of [1..N] free of monochromatic
    {x, y, x+y}, by exhaustive backtracking.

    Colors are introduced in order (a new element may open at most one new
    color), which removes the r! relabelling symmetry.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    best = [0, ()]
    nodes = 0
    masks = [0] * r
    colors = []

    def dfs(k, used):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"schur_number({r}) exceeded {budget} nodes")
        if k - 1 > best[0]:
            best[0], best[1] = k - 1, tuple(colors)
        for col in range(min(used + 1, r)):
            if _fits(masks[col] | 1 << k, k, not distinct):
                masks[col] |= 1 << k
                colors.append(col)
                dfs(k + 1, max(used, col + 1))
                colors.pop()
                masks[col] &= ~(1 << k)

    dfs(1, 0)
    return SchurResult(r, best[0], Coloring(best[1], r), nodes)


def schur_oracle_exhaustive(r: int, N: int, distinct: bool = False):
    """Some r-coloring of [1..N] without a Schur triple, by trying all r^N."""
    for colors in itertools.product(range(r), repeat=N):
        c = Coloring(colors, r)
        if schur_search(c, distinct) is None:
            return c
    return None


def schur_extension_counts(r: int, limit: int, distinct: bool = False):
    """Number of valid r-colorings of [1..k] for k = 0..limit, grown one
    element at a time without symmetry reduction."""
    layer = [tuple([0] * r)]  # one bit mask per color
    counts = [1]
    for k in range(1, limit + 1):
        nxt = []
        for masks in layer:
            for col in range(r):
                m = masks[col] | 1 << k
                if _fits(m, k, not distinct):
                    nxt.append(masks[:col] + (m,) + masks[col + 1:])
        layer = nxt
        counts.append(len(layer))
        if not layer:
            break
    return counts


# --------------------------------------------------------------------------
# Folkman / Hilbert / simultaneous FS-FP


def _fs_tuples(N, n, distinct, color_fn=None):
    """Tuples (x_0 <= ... ) in lex order whose FS lies in [1..N]; if
    ``color_fn`` is given, FS must also be monochromatic."""
    seq, sums = [], []

    def dfs(start):
        if len(seq) == n:
            yield tuple(seq), sorted(set(sums))
            return
        for x in range(start, N + 1):
            new = [x] + [s + x for s in sums]
            if max(new) > N:
                break
            if color_fn is not None:
                col = color_fn(seq[0] if seq else x)
                if any(color_fn(s) != col for s in new):
                    continue
            seq.append(x)
            sums.extend(new)
            yield from dfs(x + 1 if distinct else x)
            del sums[len(sums) - len(new):]
            seq.pop()

    yield from dfs(1)


def folkman_search(c: Coloring, n: int, distinct: bool = True):
    """First n-tuple (lexicographic) whose FS set is monochromatic."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for seq, sums in _fs_tuples(c.N, n, distinct, c):
        return FSWitness("folkman", [list(seq)], c(seq[0]), sums)
    return None


def hilbert_cube_search(c: Coloring, n: int, b_count: int, distinct: bool = True):
    """Tuple x and b_count shifts b >= 0 with every b + FS(x) inside one part."""
    if c.N == 0:
        return None
    for seq, sums in _fs_tuples(c.N, n, distinct):
        top = sums[-1]
        found = {}
        for b in range(0, c.N - top + 1):
            col = c(b + sums[0])
            if all(c(b + s) == col for s in sums):
                found.setdefault(col, []).append(b)
                if len(found[col]) == b_count:
                    B = found[col]
                    realized = sorted({b_ + s for b_ in B for s in sums})
                    return FSWitness("hilbert", [list(seq)], col, realized, {"B": B})
    return None


def _fp_tuples(N, L, distinct, color, c):
    seq, prods = [], []

    def dfs(start):
        if len(seq) == L:
            yield tuple(seq), sorted(set(prods))
            return
        for y in range(start, N + 1):
            new = [y] + [p * y for p in prods]
            if max(new) > N:
                break
            if any(c(p) != color for p in new):
                continue
            seq.append(y)
            prods.extend(new)
            yield from dfs(y + 1 if distinct else y)
            del prods[len(prods) - len(new):]
            seq.pop()

    yield from dfs(1)


def simultaneous_fs_fp_search(c: Coloring, L: int, distinct: bool = True):
    """Sequences x, y of length L with FS(x) and FP(y) in one part."""
    fp_cache = {}
    for xs, sums in _fs_tuples(c.N, L, distinct, c):
        col = c(xs[0])
        if col not in fp_cache:
            fp_cache[col] = next(iter(_fp_tuples(c.N, L, distinct, col, c)), None)
        hit = fp_cache[col]
        if hit is not None:
            ys, prods = hit
            return FSWitness("simultaneous", [list(xs), list(ys)], col, sorted(set(sums) | set(prods)),
                             {"fs": sums, "fp": prods})
    return None


# --------------------------------------------------------------------------
# multidimensional product-FS grids


def product_fs_search(c: GridColoring, m: int, L: int, budget: int | None = None):
    """Distinct m-sequences on the leading axes and an L-sequence on the last
    axis whose product of FS sets is monochromatic."""
    shape = c.shape
    lead = [list(_fs_tuples(N, m, True)) for N in shape[:-1]]
    last_N = shape[-1]
    nodes = 0
    for choice in itertools.product(*lead):
        lead_sets = [sums for _, sums in choice]
        lead_points = list(itertools.product(*lead_sets))
        color = None
        seq, sums = [], []

        def ok(vals, col):
            return all(c(p + (v,)) == col for p in lead_points for v in vals)

        def dfs(start):
            nonlocal nodes, color
            if len(seq) == L:
                return True
            for x in range(start, last_N + 1):
                nodes += 1
                if budget is not None and nodes > budget:
                    raise BudgetExceeded(f"product_fs_search exceeded {budget} nodes")
                new = [x] + [s + x for s in sums]
                if max(new) > last_N:
                    break
                col = color if color is not None else c(lead_points[0] + (x,))
                if not ok(new, col):
                    continue
                fresh = color is None
                color = col
                seq.append(x)
                sums.extend(new)
                if dfs(x + 1):
                    return True
                del sums[len(sums) - len(new):]
                seq.pop()
                if fresh:
                    color = None
            return False

        if dfs(1):
            seqs = [list(s) for s, _ in choice] + [list(seq)]
            axes = lead_sets + [sorted(set(sums))]
            grid = [list(p) for p in itertools.product(*axes)]
            return FSWitness("product-fs", seqs, color, grid, {"axes": axes})
    return None


def recheck_witness(w: FSWitness, coloring) -> bool:
    """Re-verify a witness by direct membership evaluation."""
    if w.kind == "folkman":
        return sorted(fs_set(w.sequences[0])) == w.realized and all(coloring(s) == w.color for s in w.realized)
    if w.kind == "hilbert":
        sums = fs_set(w.sequences[0])
        return len(set(w.extra["B"])) == len(w.extra["B"]) and all(
            coloring(b + s) == w.color for b in w.extra["B"] for s in sums)
    if w.kind == "simultaneous":
        xs, ys = w.sequences
        pts = fs_set(xs) | fp_set(ys)
        return all(coloring(p) == w.color for p in pts)
    if w.kind == "product-fs":
        axes = [sorted(fs_set(s)) for s in w.sequences]
        distinct = all(len(set(s)) == len(s) for s in w.sequences)
        return distinct and all(coloring(tuple(p)) == w.color for p in itertools.product(*axes))
    raise ValueError(f"unknown witness kind {w.kind!r}")


# --------------------------------------------------------------------------
# Key Lemma


@dataclass
class KeyLemmaReport:
    term: str
    degree: int
    n: int
    tuples: int = 0
    vacuous: int = 0
    confirming: int = 0
    counterexamples: int = 0

    def to_json(self):
        return dict(self.__dict__)

    def merge(self, other):
        self.tuples += other.tuples
        self.vacuous += other.vacuous
        self.confirming += other.confirming
        self.counterexamples += other.counterexamples


def _vector_add_table(instance, n):
    m = instance.size
    coords = grid_coords(m, n)
    sums = instance.add[coords[:, :, None], coords[:, None, :]]  # (n, P, P)
    out = np.zeros(sums.shape[1:], dtype=np.int64)
    for i in range(n):
        out = out * m + sums[i]
    return out


def _check_tuples(vals, vadd, tuples):
    """(vanish-on-FS flags) for an array of index tuples, shape (T, d+1)."""
    T, width = tuples.shape
    subset_sums = {}
    ok = np.ones(T, dtype=bool)
    for mask in range(1, 1 << width):
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        s = tuples[:, i] if rest == 0 else vadd[subset_sums[rest], tuples[:, i]]
        subset_sums[mask] = s
        ok &= vals[s] == 0
    return ok


def verify_key_lemma(instance: FinitePolyring, F, mode: str = "exhaustive", trials: int = 1000,
                     seed: int = 0, n: int | None = None, max_tuples: int = 2_000_000) -> KeyLemmaReport:
    """Check: F vanishing on FS(a_0..a_d) (d = degree of F) forces F(0) = 0."""
    n = max(1, max_var(F)) if n is None else n
    d = degree(F)
    P = instance.size ** n
    vals = evaluate_grid(F, instance, n)
    vadd = _vector_add_table(instance, n)
    width = d + 1
    if mode == "exhaustive":
        total = P ** width
        if total > max_tuples:
            raise BudgetExceeded(f"{total} tuples exceed max_tuples={max_tuples}")
        tuples = np.array(list(itertools.product(range(P), repeat=width)), dtype=np.int64).reshape(-1, width)
    elif mode == "random":
        rng = np.random.default_rng(seed)
        tuples = rng.integers(0, P, size=(trials, width))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    vanish = _check_tuples(vals, vadd, tuples)
    report = KeyLemmaReport(to_text(F), d, n, tuples=len(tuples))
    report.confirming = int(vanish.sum())
    report.vacuous = report.tuples - report.confirming
    if report.confirming and vals[0] != 0:
        bad = tuples[np.argmax(vanish)]
        report.counterexamples = int(vanish.sum())
        raise KeyLemmaViolation(f"{to_text(F)} vanishes on FS{tuple(int(v) for v in bad)} but F(0) != 0",
                                tuple(int(v) for v in bad))
    return report


@lru_cache(maxsize=None)
def _campaign_groups():
    """Abelian groups of order <= 12 used by the randomized campaign."""
    out = [cyclic_group(m) for m in range(2, 13)]
    for sizes in [(2, 2), (2, 4), (2, 6), (3, 3), (2, 2, 2), (2, 2, 3)]:
        g = direct_product([cyclic_group(s) for s in sizes])
        out.append(g.with_ops({}, "x".join(f"z{s}" for s in sizes)))
    return tuple(out)


@lru_cache(maxsize=None)
def _campaign_ops(index, arity, cap):
    group = _campaign_groups()[index]
    res = enumerate_distributive_ops(group, arity, cap=cap)
    return tuple(res.tables)


def _campaign_chunk(args):
    seed_seq, pairs, tuples_per_pair, max_degree, max_carrier, cap = args
    rng = np.random.default_rng(seed_seq)
    allowed = [i for i, g in enumerate(_campaign_groups()) if g.size <= max_carrier]
    totals = KeyLemmaReport("campaign", max_degree, 0)
    done = 0
    while done < pairs:
        index = allowed[int(rng.integers(len(allowed)))]
        group = _campaign_groups()[index]
        unary = _campaign_ops(index, 1, cap)
        binary = _campaign_ops(index, 2, cap)
        ops = {"f": unary[int(rng.integers(len(unary)))], "m": binary[int(rng.integers(len(binary)))]}
        inst = group.with_ops(ops)
        n = int(rng.integers(1, 3))
        consts = tuple(int(v) for v in rng.integers(0, group.size, size=2))
        F = random_term(rng, Signature.of(f=1, m=2), n, depth=4, constants=consts)
        if degree(F) > max_degree:
            continue
        rep = verify_key_lemma(inst, F, "random", tuples_per_pair, seed=int(rng.integers(2 ** 32)), n=n)
        totals.merge(rep)
        done += 1
    return totals


def key_lemma_campaign(pairs: int = 500, tuples_per_pair: int = 20, seed: int = 0, max_degree: int = 3,
                       max_carrier: int = 12, chunks: int = 16, cap: int = 30_000) -> KeyLemmaReport:
    """Randomized (instance, term, tuple) trials.  Work is cut into a fixed
    number of seeded chunks, so the result does not depend on thread count."""
    seeds = np.random.SeedSequence(seed).spawn(chunks)
    sizes = [pairs // chunks + (1 if i < pairs % chunks else 0) for i in range(chunks)]
    parts = ordered_map(_campaign_chunk, [(s, k, tuples_per_pair, max_degree, max_carrier, cap)
                                          for s, k in zip(seeds, sizes)])
    total = KeyLemmaReport("campaign", max_degree, 0)
    for p in parts:
        total.merge(p)
    total.n = pairs
    return total
