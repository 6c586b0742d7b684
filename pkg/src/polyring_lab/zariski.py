"""Zariski topologies of finite polyrings and nowhere-density certificates.

Subsets of a finite space are Python ints used as bit masks over the
space's point list.  A space keeps only its closed subbase (root sets of
term functions); closures are computed from it directly, so the base of
all algebraic sets never has to be materialised.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .algebras import (FinitePolyring, InstanceError, SymbolicPolyring, boolean_power, evaluate,
                       evaluate_grid, grid_coords, instance_to_json, load_instance)
from .terms import (App, Const, Neg, Sum, Term, Var, Zero, degree, max_var, parse_term, to_text)

__all__ = [
    "TermFunction", "Clone", "FiniteSpace", "FiniteValuedSet", "Certificate", "NotFound",
    "CoverViolation", "CertificateError", "term_clone", "root_set", "closed_base",
    "zariski_closure", "analyze", "ind_dimension", "verify_cantor_example",
    "nowhere_dense_certificate", "verify_certificate", "linear_vanishing_terms", "window_closure",
    "mask_from_bools", "mask_members", "product_space", "compare_topologies",
]


def mask_from_bools(flags) -> int:
    flags = np.asarray(flags, dtype=bool)
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def mask_members(mask: int):
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


# --------------------------------------------------------------------------
# clones of term functions


@dataclass(frozen=True, eq=False)
class TermFunction:
    table: np.ndarray
    provenance: Term | None = None

    def __call__(self, index):
        return int(self.table[index])


@dataclass(eq=False)
class Clone:
    instance: FinitePolyring
    n: int
    functions: list
    status: str  # "complete" | "capped"

    @property
    def complete(self):
        return self.status == "complete"

    @property
    def points(self):
        return [tuple(int(v) for v in p) for p in grid_coords(self.instance.size, self.n).T]

    def __len__(self):
        return len(self.functions)


def _row_keys(rows):
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    return [r.tobytes() for r in rows]


def term_clone(instance: FinitePolyring, n: int, cap: int = 4096) -> Clone:
    """Least set of functions K^n -> K containing projections, constants and
    zero, closed under pointwise +, - and every operation (fixpoint).

    Functions are deduplicated by their tables.  Stops with status
    ``capped`` once more than ``cap`` distinct functions are known.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = instance.size
    coords = grid_coords(m, n)
    P = coords.shape[1]
    add, neg = instance.add, instance.neg
    seen = {}
    tables, terms = [], []
    queue = []

    def offer(row, term):
        key = row.tobytes()
        if key in seen:
            return False
        seen[key] = len(tables)
        tables.append(row)
        terms.append(term)
        queue.append(len(tables) - 1)
        return True

    offer(np.zeros(P, dtype=np.int64), Zero())
    for c in range(1, m):
        offer(np.full(P, c, dtype=np.int64), Const(c))
    for i in range(n):
        offer(coords[i].copy(), Var(i + 1))

    processed = []
    head = 0
    capped = False
    while head < len(queue) and not capped:
        fi = queue[head]
        head += 1
        processed.append(fi)
        f = tables[fi]
        proc = np.stack([tables[j] for j in processed])
        batches = [(neg[f][None, :], lambda j: Neg(terms[fi])),
                   (add[f[None, :], proc], lambda j: Sum(terms[fi], terms[processed[j]]))]
        for name, table in instance.ops.items():
            k = table.ndim
            if k == 1:
                batches.append((table[f][None, :], lambda j, name=name: App(name, (terms[fi],))))
                continue
            if k == 2:
                batches.append((table[f[None, :], proc],
                                lambda j, name=name: App(name, (terms[fi], terms[processed[j]]))))
                batches.append((table[proc, f[None, :]],
                                lambda j, name=name: App(name, (terms[processed[j]], terms[fi]))))
                continue
            # f in at least one coordinate, processed functions elsewhere
            for pos in range(k):
                for combo in itertools.product(range(len(processed)), repeat=k - 1):
                    args = [tables[processed[c]] for c in combo]
                    args.insert(pos, f)
                    row = table[tuple(args)]
                    arg_terms = [terms[processed[c]] for c in combo]
                    arg_terms.insert(pos, terms[fi])
                    batches.append((row[None, :], lambda j, name=name, at=tuple(arg_terms): App(name, at)))
        for rows, make in batches:
            for j, key in enumerate(_row_keys(rows)):
                if key not in seen:
                    if len(tables) >= cap:
                        capped = True
                        break
                    offer(rows[j].copy(), make(j))
            if capped:
                break
    functions = [TermFunction(t, p) for t, p in zip(tables, terms)]
    for fn in functions:
        fn.table.setflags(write=False)
    return Clone(instance, n, functions, "capped" if capped else "complete")


def root_set(f) -> int:
    """Bit mask of the zeros of a term function (or of a raw value array)."""
    table = f.table if isinstance(f, TermFunction) else np.asarray(f)
    return mask_from_bools(table == 0)


# --------------------------------------------------------------------------
# finite spaces


@dataclass(eq=False)
class FiniteSpace:
    """Points plus a closed subbase; closed sets are intersections of unions
    of at most ``union_arity`` subbase members (any finite number if None)."""

    points: list
    subbase: tuple
    union_arity: int | None = None
    lower_approximation: bool = False
    base_cap: int = 1 << 16
    _avoid: list = field(default=None, repr=False)

    def __post_init__(self):
        full = self.full
        self.subbase = tuple(sorted({s & full for s in self.subbase}))

    @classmethod
    def from_closed_sets(cls, points, closed):
        pts = list(points)
        return cls(pts, tuple(_as_mask(pts, c) for c in closed))

    @classmethod
    def from_open_sets(cls, points, opens):
        pts = list(points)
        full = (1 << len(pts)) - 1
        return cls(pts, tuple(full & ~_as_mask(pts, o) for o in opens))

    @property
    def size(self):
        return len(self.points)

    @property
    def full(self):
        return (1 << len(self.points)) - 1

    def mask(self, subset):
        return _as_mask(self.points, subset)

    def members(self, mask):
        return [self.points[i] for i in mask_members(mask)]

    def _avoiders(self):
        if self._avoid is None:
            avoid = []
            for x in range(self.size):
                bit = 1 << x
                u = 0
                for s in self.subbase:
                    if not s & bit:
                        u |= s
                avoid.append(u)
            self._avoid = avoid
        return self._avoid

    def closure(self, S: int) -> int:
        if S == 0:
            return 0
        if self.union_arity is None:
            return sum(1 << x for x, u in enumerate(self._avoiders()) if S & ~u)
        out = 0
        for x in range(self.size):
            bit = 1 << x
            cands = [s for s in self.subbase if not s & bit]
            if not _covered(S, cands, self.union_arity):
                out |= bit
        return out

    def interior(self, S: int) -> int:
        return self.full & ~self.closure(self.full & ~S)

    def is_closed(self, S: int) -> bool:
        return self.closure(S) == S

    def singleton_closures(self):
        return [self.closure(1 << x) for x in range(self.size)]

    def minimal_neighbourhoods(self):
        cls = self.singleton_closures()
        return [sum(1 << y for y in range(self.size) if cls[y] >> x & 1) for x in range(self.size)]

    # base of algebraic sets

    @property
    def saturated(self):
        """Every subset is algebraic (all singletons are subbase members)."""
        members = set(self.subbase)
        return all((1 << x) in members for x in range(self.size))

    def base(self):
        """All unions of <= union_arity subbase sets, or None past ``base_cap``."""
        if self.saturated and (1 << self.size) > self.base_cap:
            return None
        arity = self.union_arity if self.union_arity is not None else len(self.subbase)
        layer = {0}
        found = {0}
        for _ in range(arity):
            nxt = {a | s for a in layer for s in self.subbase} - found
            if not nxt:
                break
            found |= nxt
            if len(found) > self.base_cap:
                return None
            layer = nxt
        return sorted(found)

    def base_size(self):
        b = self.base()
        if b is not None:
            return len(b)
        if self.saturated:
            return 1 << self.size
        return None


def _as_mask(points, subset):
    if isinstance(subset, int):
        return subset
    where = {p: i for i, p in enumerate(points)}
    out = 0
    for p in subset:
        out |= 1 << where[p]
    return out


def _covered(S, sets, k):
    if S == 0:
        return True
    if k == 0:
        return False
    low = S & -S
    for s in sets:
        if s & low and _covered(S & ~s, sets, k - 1):
            return True
    return False


def closed_base(clone: Clone, union_arity: int | None = None, base_cap: int = 1 << 16) -> FiniteSpace:
    roots = {root_set(f) for f in clone.functions}
    return FiniteSpace(clone.points, tuple(roots), union_arity, not clone.complete, base_cap)


def zariski_closure(S, space: FiniteSpace):
    """Closure of ``S`` (mask or iterable of points); returns a mask."""
    return space.closure(space.mask(S))


# --------------------------------------------------------------------------
# topological analysis


def analyze(space: FiniteSpace, subset=None) -> dict:
    nbhd = space.minimal_neighbourhoods()
    isolated = [x for x in range(space.size) if nbhd[x] == 1 << x]
    pseudo = [1 if nbhd[x] == 1 << x else "inf" for x in range(space.size)]
    parent = list(range(space.size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(space.size):
        for y in mask_members(nbhd[x]):
            ra, rb = find(x), find(y)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    comps = {}
    for x in range(space.size):
        comps.setdefault(find(x), []).append(x)
    report = {
        "points": space.size,
        "union_arity": space.union_arity,
        "lower_approximation": space.lower_approximation,
        "isolated_points": [_jsonable(space.points[x]) for x in isolated],
        "discrete": len(isolated) == space.size,
        "connected": len(comps) <= 1,
        "components": [[_jsonable(space.points[x]) for x in c] for c in comps.values()],
        "pseudocharacter": {_label(space.points[x]): pseudo[x] for x in range(space.size)},
        "space_pseudocharacter": ("inf" if "inf" in pseudo else (1 if pseudo else 0)),
        "ind": ind_dimension(space) if space.size <= 64 else None,
        "subbase_size": len(space.subbase),
        "base_size": space.base_size(),
        "base_saturated": space.saturated,
    }
    if subset is not None:
        S = space.mask(subset)
        cl = space.closure(S)
        interior = space.interior(S)
        report["subset"] = {
            "members": [_jsonable(p) for p in space.members(S)],
            "closure": [_jsonable(p) for p in space.members(cl)],
            "interior": [_jsonable(p) for p in space.members(interior)],
            "closed": cl == S,
            "nowhere_dense": space.interior(cl) == 0,
        }
    return report


def _jsonable(p):
    return list(p) if isinstance(p, tuple) else p


def _label(p):
    return ",".join(map(str, p)) if isinstance(p, tuple) else str(p)


def ind_dimension(space: FiniteSpace) -> int:
    """Small inductive dimension, recursing over subspaces.

    In a finite space the minimal open neighbourhood U_x refines every open
    set around x, so ind(Y) = max over x in Y of ind(boundary_Y(U_x & Y)) + 1.
    """
    nbhd = space.minimal_neighbourhoods()

    @lru_cache(maxsize=None)
    def ind(Y):
        if Y == 0:
            return -1
        best = 0
        for x in mask_members(Y):
            V = nbhd[x] & Y
            boundary = (space.closure(V) & Y) & ~V
            best = max(best, ind(boundary) + 1)
        return best

    return ind(space.full)


def product_space(line: FiniteSpace, n: int) -> FiniteSpace:
    """Product topology on line^n: closed subbase of cylinders over closed sets."""
    m = line.size
    flat = [p[0] if isinstance(p, tuple) and len(p) == 1 else p for p in line.points]
    points = [tuple(flat[i] for i in idx) for idx in itertools.product(range(m), repeat=n)]
    closed = line.base() or list(line.subbase)
    cyl = []
    for axis in range(n):
        for C in closed:
            mask = 0
            for j, idx in enumerate(itertools.product(range(m), repeat=n)):
                if C >> idx[axis] & 1:
                    mask |= 1 << j
            cyl.append(mask)
    return FiniteSpace(points, tuple(cyl))


def compare_topologies(full: FiniteSpace, product: FiniteSpace) -> dict:
    """Side-by-side comparison on the same point set; strictness is reported,
    not asserted."""
    if full.points != product.points:
        raise ValueError("spaces must share the point list")
    a, b = full.singleton_closures(), product.singleton_closures()
    # closure in the finer topology is contained in the coarser one
    includes = all(x & ~y == 0 for x, y in zip(a, b))
    equal = a == b
    return {"zariski_includes_product": includes, "strictly_finer": includes and not equal,
            "zariski_isolated": sum(c.bit_count() == 1 for c in a),
            "product_isolated": sum(c.bit_count() == 1 for c in b)}


# --------------------------------------------------------------------------
# the Cantor-set example over (F_2)^m


def verify_cantor_example(m: int, limit: int = 12) -> dict:
    """Check root_set(ax + a) = complement of root_set(ax) over (F_2)^m and
    that every cylinder {b : b_i = e} is a root set."""
    if m < 1:
        raise ValueError("m must be >= 1 (the empty product is not allowed)")
    if m > limit:
        raise ValueError(f"m={m} exceeds the configured limit {limit}")
    K = boolean_power(m)
    size = K.size
    full = (1 << size) - 1
    coords = grid_coords(size, 1)
    roots = set()
    complement_ok = []
    unit_ok = []
    for a in range(size):
        lin = App("m", (Const(a), Var(1)))
        s_ax = root_set(evaluate_grid(lin, K, 1, coords))
        s_axa = root_set(evaluate_grid(Sum(lin, Const(a)), K, 1, coords))
        roots.update((s_ax, s_axa))
        complement_ok.append(s_axa == full & ~s_ax)
        if a and not a & (a - 1):
            unit_ok.append(complement_ok[-1])
    cylinders = {}
    for i in range(m):
        for bit in (0, 1):
            cyl = mask_from_bools([(b >> i & 1) == bit for b in range(size)])
            cylinders[f"b{i}={bit}"] = cyl in roots
    point_roots = [root_set(evaluate_grid(Sum(Var(1), Const(c)), K, 1, coords)) for c in range(size)]
    singletons = all(r == 1 << c for c, r in enumerate(point_roots))
    report = {
        "m": m,
        "carrier_size": size,
        "complement_identity": all(complement_ok),
        "complement_checked": len(complement_ok),
        "complement_failures": [a for a, ok in enumerate(complement_ok) if not ok],
        # a = e_i, the case behind the cylinder sets
        "complement_identity_unit_vectors": all(unit_ok),
        "cylinders_algebraic": all(cylinders.values()),
        "cylinders": cylinders,
        "root_sets_reached": len(roots),
        "singletons_algebraic": singletons,
        # every subset is a finite union of singleton root sets
        "algebraic_sets": (1 << size) if singletons else None,
    }
    if size <= 4:
        space = FiniteSpace(list(range(size)), tuple(roots) + tuple(point_roots))
        report["algebraic_sets_enumerated"] = len(space.base())
    return report


# --------------------------------------------------------------------------
# restricted closures over Z^d and the parabola surrogate


def linear_vanishing_terms(points):
    """Basis of integer vectors (k_1..k_n, c) with sum k_i p_i + c = 0 on all points."""
    points = [tuple(p) for p in points]
    n = len(points[0]) if points else 0
    rows = [[Fraction(v) for v in p] + [Fraction(1)] for p in points]
    cols = n + 1
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        vec = [Fraction(0)] * cols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][free]
        denom = 1
        for v in vec:
            denom = denom * v.denominator // np.gcd(denom, v.denominator)
        vec = [int(v * denom) for v in vec]
        if next(v for v in vec if v) < 0:
            vec = [-v for v in vec]
        basis.append(tuple(vec))
    return basis


def window_closure(instance, terms, S, window):
    """Closure of S inside a finite window using intersections of root sets
    of the given terms (no unions)."""
    window = [tuple(p) for p in window]
    S = {tuple(p) for p in S}
    closure = set(window)
    for t in terms:
        zeros = {p for p in window if evaluate(t, instance, p) == instance.zero}
        if S <= zeros:
            closure &= zeros
    return closure


# --------------------------------------------------------------------------
# nowhere-density certificates


class CoverViolation(ValueError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"point {point} lies in neither A nor any root set")


class CertificateError(ValueError):
    """Malformed certificate document."""


@dataclass(frozen=True)
class FiniteValuedSet:
    """A subset of K^(n+1) finite-valued in its last coordinate.

    kinds: ``empty``; ``graph`` (last coordinate equals a term in the
    others); ``points`` (an explicit finite list).
    """

    kind: str = "empty"
    term: Term | None = None
    points: tuple = ()

    def contains(self, instance, point) -> bool:
        if self.kind == "empty":
            return False
        if self.kind == "graph":
            return point[-1] == evaluate(self.term, instance, point[:-1])
        if self.kind == "points":
            return tuple(point) in self.points
        raise ValueError(f"unknown finite-valued set kind {self.kind!r}")

    def to_json(self):
        out = {"kind": self.kind}
        if self.term is not None:
            out["term"] = to_text(self.term)
        if self.points:
            out["points"] = [_jsonable_elem(p) for p in self.points]
        return out

    @classmethod
    def from_json(cls, doc, signature=None):
        kind = doc.get("kind", "empty")
        term = parse_term(doc["term"], signature) if "term" in doc else None
        points = tuple(tuple(_elem(v) for v in p) for p in doc.get("points", ()))
        return cls(kind, term, points)


def _jsonable_elem(x):
    if isinstance(x, tuple):
        return [_jsonable_elem(v) for v in x]
    return x


def _elem(v):
    return tuple(v) if isinstance(v, list) else v


@dataclass
class Certificate:
    instance: object
    terms: list
    A: FiniteValuedSet
    m: int
    sequences: list
    term_index: int
    grid: list
    values: list
    zero_value: object
    found_by: str = "systematic"

    @property
    def zero_in_root_set(self):
        return self.zero_value == self.instance.zero

    def to_json(self) -> dict:
        return {
            "kind": "nowhere-dense-certificate",
            "instance": instance_to_json(self.instance),
            "terms": [to_text(t) for t in self.terms],
            "A": self.A.to_json(),
            "m": self.m,
            "sequences": [[_jsonable_elem(a) for a in seq] for seq in self.sequences],
            "term_index": self.term_index,
            "grid": [[_jsonable_elem(c) for c in p] for p in self.grid],
            "values": [_jsonable_elem(v) for v in self.values],
            "zero_value": _jsonable_elem(self.zero_value),
            "zero_in_root_set": self.zero_in_root_set,
            "found_by": self.found_by,
        }


@dataclass
class NotFound:
    reason: str
    examined: int

    def to_json(self):
        return {"kind": "not-found", "reason": self.reason, "examined": self.examined}


def _fs(seq, plus):
    sums = []
    for x in seq:
        sums = sums + [x] + [plus(s, x) for s in sums]
    return sorted(set(sums))


def _element_pool(instance, window):
    if isinstance(instance, SymbolicPolyring):
        d = instance.dimension
        vals = sorted(range(-window, window + 1), key=lambda v: (abs(v), v < 0))
        pool = [v for v in itertools.product(vals, repeat=d) if any(v)]
        pool.sort(key=lambda v: (max(abs(c) for c in v), [(abs(c), c < 0) for c in v]))
        return pool
    return [a for a in range(1, min(instance.size, window + 1))]


def _grid(sequences, instance):
    axes = [_fs(seq, instance.plus) for seq in sequences]
    return [tuple(p) for p in itertools.product(*axes)]


def nowhere_dense_certificate(instance, terms, A: FiniteValuedSet, m: int, budget: int = 20000,
                              window: int = 4, seed: int = 0, dims: int | None = None,
                              random_fraction: float = 0.5):
    """Search for distinct sequences whose product-FS grid avoids A and lies
    in one root set S_F; F(0) = 0 then follows from the Key Lemma and is
    checked by evaluation.

    Systematic lexicographic sweep first, then seeded random sampling from a
    doubled window.  Returns a Certificate or NotFound.
    """
    terms = list(terms)
    if dims is None:
        dims = max([max_var(t) for t in terms] + [max_var(A.term) + 1 if A.term is not None else 0] + [1])
    top = max((degree(t) for t in terms), default=0)
    if m < top:
        raise ValueError(f"m={m} is below the maximal degree {top}")
    pool = _element_pool(instance, window)
    zero = instance.zero

    def vanishes(F, p):
        return evaluate(F, instance, p) == zero

    # the cover hypothesis on the sampled window
    window_pts = list(itertools.product(pool[: max(1, min(len(pool), 12))] + [zero], repeat=dims))
    tight = True
    for p in window_pts:
        inA = A.contains(instance, p)
        zeros = [vanishes(F, p) for F in terms]
        if not inA and not any(zeros):
            raise CoverViolation(p)
        if any(zeros) and not inA:
            tight = False

    length = m + 1
    if len(pool) < length:
        return NotFound("window too small for distinct sequences", 0)

    def try_grid(sequences):
        grid = _grid(sequences, instance)
        if any(A.contains(instance, p) for p in grid):
            return None
        for idx, F in enumerate(terms):
            if all(vanishes(F, p) for p in grid):
                return idx, grid
        return None

    examined = 0
    systematic_budget = int(budget * (1 - random_fraction))
    combos = itertools.combinations(pool, length)
    per_axis = list(itertools.islice(combos, max(1, int(round(systematic_budget ** (1 / dims))) + 1)))
    for sequences in itertools.product(per_axis, repeat=dims):
        if examined >= systematic_budget:
            break
        examined += 1
        hit = try_grid(sequences)
        if hit:
            return _certificate(instance, terms, A, m, sequences, hit, "systematic")
    rng = np.random.default_rng(seed)
    wide = _element_pool(instance, 2 * window)
    while examined < budget:
        examined += 1
        sequences = tuple(tuple(wide[i] for i in sorted(rng.choice(len(wide), size=length, replace=False)))
                          for _ in range(dims))
        hit = try_grid(sequences)
        if hit:
            return _certificate(instance, terms, A, m, sequences, hit, "random")
    return NotFound("cover too tight" if tight else "budget exhausted", examined)


def _certificate(instance, terms, A, m, sequences, hit, how):
    idx, grid = hit
    F = terms[idx]
    dims = len(sequences)
    zero_pt = (instance.zero,) * dims
    values = [evaluate(F, instance, p) for p in grid]
    zero_value = evaluate(F, instance, zero_pt)
    if zero_value != instance.zero:
        from .ramsey import KeyLemmaViolation
        raise KeyLemmaViolation(f"F={to_text(F)} vanishes on a product-FS grid but F(0) != 0")
    return Certificate(instance, terms, A, m, [list(s) for s in sequences], idx, grid, values, zero_value, how)


def verify_certificate(doc) -> tuple:
    """Replay a certificate; returns (ok, problems).  Raises CertificateError
    when the document is malformed."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise CertificateError(f"malformed certificate: {exc}") from None
    try:
        if doc.get("kind") != "nowhere-dense-certificate":
            raise CertificateError("not a nowhere-density certificate")
        instance = load_instance(doc["instance"])
        sig = instance.signature
        terms = [parse_term(t, sig) for t in doc["terms"]]
        A = FiniteValuedSet.from_json(doc["A"], sig)
        m = int(doc["m"])
        sequences = [[_elem(a) for a in seq] for seq in doc["sequences"]]
        idx = int(doc["term_index"])
        grid = [tuple(_elem(c) for c in p) for p in doc["grid"]]
        values = [_elem(v) for v in doc["values"]]
        zero_value = _elem(doc["zero_value"])
        claimed = bool(doc["zero_in_root_set"])
        F = terms[idx]
    except CertificateError:
        raise
    except (KeyError, TypeError, ValueError, IndexError, AttributeError, InstanceError) as exc:
        raise CertificateError(f"malformed certificate: {exc}") from None

    problems = []
    for i, seq in enumerate(sequences):
        if len(set(seq)) != len(seq):
            problems.append(f"axis {i} sequence has repeated elements")
        if len(seq) < m + 1:
            problems.append(f"axis {i} sequence shorter than m+1")
    if degree(F) > m:
        problems.append("term degree exceeds m")
    expected = _grid(sequences, instance)
    if expected != grid:
        problems.append("grid does not match the finite sums of the sequences")
    if len(values) != len(grid):
        problems.append("value count does not match grid size")
    for p, v in zip(grid, values):
        actual = evaluate(F, instance, p)
        if actual != v:
            problems.append(f"value at {p} recorded as {v}, evaluates to {actual}")
        if actual != instance.zero:
            problems.append(f"F does not vanish at grid point {p}")
        if A.contains(instance, p):
            problems.append(f"grid point {p} lies in A")
    zero_pt = (instance.zero,) * len(sequences)
    actual_zero = evaluate(F, instance, zero_pt)
    if actual_zero != zero_value:
        problems.append("recorded F(0) does not match evaluation")
    if actual_zero != instance.zero or not claimed:
        problems.append("conclusion 0 in S_F does not hold")
    return not problems, problems
