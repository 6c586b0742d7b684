"""Concrete polyrings: finite table models and exact integer models.

Finite carriers are ``0..m-1`` with ``0`` the additive identity.  Operation
tables are numpy integer arrays with one axis per argument.
"""

from __future__ import annotations

import itertools
import json
import math
import os
import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .terms import App, Const, Neg, Polynomial, Signature, Sum, Term, TermError, Var, Zero

__all__ = [
    "FinitePolyring", "SymbolicPolyring", "FiniteGroupoid", "AxiomReport", "OpEnumeration",
    "InstanceError", "check_axioms", "evaluate", "evaluate_grid", "enumerate_distributive_ops",
    "groupoid_ring", "direct_product", "cyclic_group", "cyclic_ring", "boolean_power",
    "load_instance", "named_instance", "instance_to_json", "point_index", "index_point",
]


class InstanceError(ValueError):
    pass


def _frozen(a, dtype=np.int64):
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FinitePolyring:
    add: np.ndarray
    neg: np.ndarray
    ops: Mapping[str, np.ndarray] = field(default_factory=dict)
    constants: Mapping[str, int] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        add = _frozen(self.add)
        m = add.shape[0] if add.ndim == 2 else -1
        if add.ndim != 2 or add.shape != (m, m) or m < 1:
            raise InstanceError(f"addition table must be square, got shape {add.shape}")
        neg = _frozen(self.neg)
        if neg.shape != (m,):
            raise InstanceError(f"negation table must have length {m}, got {neg.shape}")
        ops = {}
        for op_name, table in sorted(self.ops.items()):
            t = _frozen(table)
            if t.ndim < 1 or any(s != m for s in t.shape):
                raise InstanceError(f"table of {op_name!r} has shape {t.shape}, expected ({m}, ...)")
            ops[op_name] = t
        for arr in [add, neg, *ops.values()]:
            if arr.size and (arr.min() < 0 or arr.max() >= m):
                raise InstanceError("table entries outside the carrier")
        for cname, value in self.constants.items():
            if not 0 <= value < m:
                raise InstanceError(f"constant {cname!r} outside the carrier")
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "ops", ops)
        object.__setattr__(self, "constants", dict(self.constants))
        Signature(tuple((k, v.ndim) for k, v in ops.items()))

    @property
    def size(self):
        return self.add.shape[0]

    @property
    def zero(self):
        return 0

    @property
    def signature(self):
        return Signature(tuple((k, v.ndim) for k, v in self.ops.items()))

    def elements(self):
        return range(self.size)

    def plus(self, a, b):
        return int(self.add[a, b])

    # evaluation protocol shared with SymbolicPolyring
    def negate(self, a):
        return int(self.neg[a])

    def apply(self, op, args):
        try:
            table = self.ops[op]
        except KeyError:
            raise InstanceError(f"instance has no operation {op!r}") from None
        if len(args) != table.ndim:
            raise InstanceError(f"{op!r} expects {table.ndim} arguments")
        return int(table[tuple(args)])

    def constant(self, value):
        if isinstance(value, str):
            if value not in self.constants:
                raise InstanceError(f"unresolved constant {value!r}")
            return self.constants[value]
        if not 0 <= value < self.size:
            raise InstanceError(f"#{value} is not a carrier element")
        return value

    def constant_term(self, element) -> Term:
        return Const(int(element))

    def mul_by_int(self, k, a):
        out, base = 0, a
        if k < 0:
            k, base = -k, self.negate(a)
        while k:
            if k & 1:
                out = self.plus(out, base)
            base = self.plus(base, base)
            k >>= 1
        return out

    def order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.plus(x, a)
            k += 1
        return k

    def bare(self):
        return FinitePolyring(self.add, self.neg, {}, {}, self.name)

    def with_ops(self, ops, name=None):
        return FinitePolyring(self.add, self.neg, ops, self.constants, name if name is not None else self.name)



@dataclass(frozen=True)
class OpSpec:
    name: str
    kind: str
    params: Mapping = field(default_factory=dict)

    @property
    def arity(self):
        if self.kind == "matrix":
            return 1
        return int(self.params.get("arity", 2))


@dataclass(frozen=True, eq=False)
class SymbolicPolyring:
    """Carrier Z^d with exact integer arithmetic.

    Operation kinds: ``product`` (componentwise product of all arguments),
    ``matrix`` (unary, x -> Mx) and ``zero`` (constant zero of any arity).
    The constant ``#k`` denotes the vector with every coordinate equal to k.
    """

    dimension: int = 1
    ops: tuple = ()
    constants: Mapping[str, tuple] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        if self.dimension < 1:
            raise InstanceError("dimension must be positive")
        specs = []
        for op in self.ops:
            spec = op if isinstance(op, OpSpec) else OpSpec(op["name"], op["kind"], op.get("params", {}))
            if spec.kind not in ("product", "matrix", "zero"):
                raise InstanceError(f"unknown op kind {spec.kind!r}")
            if spec.kind == "matrix":
                M = spec.params.get("matrix")
                if M is None or len(M) != self.dimension or any(len(r) != self.dimension for r in M):
                    raise InstanceError(f"matrix op {spec.name!r} needs a {self.dimension}x{self.dimension} matrix")
            if spec.arity < 1:
                raise InstanceError("arity must be positive")
            specs.append(spec)
        object.__setattr__(self, "ops", tuple(specs))
        object.__setattr__(self, "constants", {k: tuple(int(c) for c in v) for k, v in self.constants.items()})
        Signature(tuple((s.name, s.arity) for s in specs))

    @property
    def zero(self):
        return (0,) * self.dimension

    @property
    def signature(self):
        return Signature(tuple((s.name, s.arity) for s in self.ops))

    def _spec(self, name):
        for s in self.ops:
            if s.name == name:
                return s
        raise InstanceError(f"instance has no operation {name!r}")

    def plus(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def negate(self, a):
        return tuple(-x for x in a)

    def apply(self, op, args):
        spec = self._spec(op)
        if len(args) != spec.arity:
            raise InstanceError(f"{op!r} expects {spec.arity} arguments")
        if spec.kind == "zero":
            return self.zero
        if spec.kind == "matrix":
            (v,) = args
            return tuple(sum(r * x for r, x in zip(row, v)) for row in spec.params["matrix"])
        return tuple(math.prod(coords) for coords in zip(*args))

    def constant(self, value):
        if isinstance(value, str):
            if value not in self.constants:
                raise InstanceError(f"unresolved constant {value!r}")
            return self.constants[value]
        return (int(value),) * self.dimension

    def constant_term(self, element) -> Term:
        element = tuple(element)
        if len(set(element)) != 1:
            for cname, v in sorted(self.constants.items()):
                if v == element:
                    return Const(cname)
            raise InstanceError(f"{element} has no constant name in this instance")
        k = element[0]
        if k == 0:
            return Zero()
        return Const(k) if k > 0 else Neg(Const(-k))

    def reduce_mod(self, element, m):
        return tuple(x % m for x in element)



@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    mul: np.ndarray
    name: str = ""

    def __post_init__(self):
        mul = _frozen(self.mul)
        m = mul.shape[0] if mul.ndim == 2 else -1
        if mul.ndim != 2 or mul.shape != (m, m) or m < 1:
            raise InstanceError(f"multiplication table must be square, got {mul.shape}")
        if mul.min() < 0 or mul.max() >= m:
            raise InstanceError("table entries outside the carrier")
        object.__setattr__(self, "mul", mul)

    @property
    def size(self):
        return self.mul.shape[0]

    def __call__(self, a, b):
        return int(self.mul[a, b])

    def is_associative(self):
        M = self.mul
        return bool(np.array_equal(M[M, :], M[:, M]))

    def associativity_witness(self):
        M = self.mul
        bad = np.argwhere(M[M, :] != M[:, M])
        return tuple(int(v) for v in bad[0]) if len(bad) else None


# --------------------------------------------------------------------------
# evaluation


def evaluate(term, instance, point=()):
    """Value of a term (or polynomial) at ``point``; x_i reads point[i-1]."""
    point = tuple(point)
    if isinstance(term, Polynomial):
        out = instance.zero
        for sign, body in term:
            v = evaluate(body, instance, point)
            out = instance.plus(out, v if sign > 0 else instance.negate(v))
        return out
    if isinstance(term, Var):
        if term.index > len(point):
            raise InstanceError(f"point of dimension {len(point)} has no coordinate x{term.index}")
        return point[term.index - 1]
    if isinstance(term, Const):
        return instance.constant(term.value)
    if isinstance(term, Zero):
        return instance.zero
    if isinstance(term, Sum):
        return instance.plus(evaluate(term.left, instance, point), evaluate(term.right, instance, point))
    if isinstance(term, Neg):
        return instance.negate(evaluate(term.arg, instance, point))
    if isinstance(term, App):
        return instance.apply(term.op, [evaluate(a, instance, point) for a in term.args])
    raise TypeError(f"not a term: {term!r}")


def point_index(point, m):
    idx = 0
    for a in point:
        idx = idx * m + a
    return idx


def index_point(idx, m, n):
    out = []
    for _ in range(n):
        idx, r = divmod(idx, m)
        out.append(r)
    return tuple(reversed(out))


def grid_coords(m, n):
    """Coordinate arrays of all points of K^n in row-major order (x1 slowest)."""
    if n == 0:
        return np.zeros((0, 1), dtype=np.int64)
    return np.indices((m,) * n, dtype=np.int64).reshape(n, -1)


def evaluate_grid(term, instance: FinitePolyring, n: int, coords=None) -> np.ndarray:
    """Values of ``term`` at every point of K^n, as a flat row-major array."""
    if coords is None:
        coords = grid_coords(instance.size, n)
    size = coords.shape[1]

    def go(t):
        if isinstance(t, Var):
            if t.index > n:
                raise InstanceError(f"x{t.index} exceeds dimension {n}")
            return coords[t.index - 1]
        if isinstance(t, Const):
            return np.full(size, instance.constant(t.value), dtype=np.int64)
        if isinstance(t, Zero):
            return np.zeros(size, dtype=np.int64)
        if isinstance(t, Sum):
            return instance.add[go(t.left), go(t.right)]
        if isinstance(t, Neg):
            return instance.neg[go(t.arg)]
        if isinstance(t, App):
            if t.op not in instance.ops:
                raise InstanceError(f"instance has no operation {t.op!r}")
            table = instance.ops[t.op]
            if table.ndim != len(t.args):
                raise InstanceError(f"{t.op!r} expects {table.ndim} arguments")
            return table[tuple(go(a) for a in t.args)]
        raise TypeError(f"not a term: {t!r}")

    if isinstance(term, Polynomial):
        out = np.zeros(size, dtype=np.int64)
        for sign, body in term:
            v = go(body)
            out = instance.add[out, v if sign > 0 else instance.neg[v]]
        return out
    return go(term)


# --------------------------------------------------------------------------
# axioms


@dataclass
class AxiomReport:
    failures: list = field(default_factory=list)
    checked: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {"ok": self.ok, "checked": self.checked,
                "failures": [{"axiom": a, "witness": list(w)} for a, w in self.failures]}


def _first(mask):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def _additivity_failures(add, table):
    """One witness per coordinate where ``table`` is not additive."""
    out = []
    for i in range(table.ndim):
        T = np.moveaxis(table, i, 0)
        lhs = T[add]  # T[x+y, rest]
        rhs = add[T[:, None, ...], T[None, :, ...]]  # T[x, rest] + T[y, rest]
        w = _first(lhs != rhs)
        if w is not None:
            x, y, *others = w
            out.append((i, x, y, tuple(others)))
    return out


def check_axioms(instance, samples: int = 64, seed: int = 0) -> AxiomReport:
    """Scan every group axiom and per-coordinate additivity.

    Finite instances are checked exhaustively; symbolic ones on the basis
    vectors plus seeded random vectors.
    """
    report = AxiomReport()
    if isinstance(instance, SymbolicPolyring):
        return _check_symbolic(instance, samples, seed)
    add, neg = instance.add, instance.neg
    m = instance.size
    report.checked += ["identity", "inverse", "commutativity", "associativity"]
    idx = np.arange(m)
    w = _first(add[0, :] != idx)
    if w is None:
        w = _first(add[:, 0] != idx)
    if w is not None:
        report.failures.append(("identity", w))
    w = _first(add[idx, neg] != 0)
    if w is not None:
        report.failures.append(("inverse", w))
    w = _first(add != add.T)
    if w is not None:
        report.failures.append(("commutativity", w))
    w = _first(add[add, :] != add[:, add])
    if w is not None:
        report.failures.append(("associativity", w))
    for op_name, table in instance.ops.items():
        report.checked.append(f"additivity:{op_name}")
        for coord, x, y, others in _additivity_failures(add, table):
            report.failures.append((f"additivity:{op_name}[{coord}]", (x, y) + others))
    return report


def _check_symbolic(instance, samples, seed):
    report = AxiomReport(checked=[f"additivity:{s.name}" for s in instance.ops])
    d = instance.dimension
    rng = np.random.default_rng(seed)
    basis = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    vectors = basis + [tuple(int(v) for v in rng.integers(-9, 10, size=d)) for _ in range(samples)]
    for spec in instance.ops:
        k = spec.arity
        for _ in range(samples):
            args = [vectors[int(rng.integers(len(vectors)))] for _ in range(k)]
            for i in range(k):
                y = vectors[int(rng.integers(len(vectors)))]
                a2 = list(args)
                a2[i] = instance.plus(args[i], y)
                a3 = list(args)
                a3[i] = y
                lhs = instance.apply(spec.name, a2)
                rhs = instance.plus(instance.apply(spec.name, args), instance.apply(spec.name, a3))
                if lhs != rhs:
                    report.failures.append((f"additivity:{spec.name}[{i}]", tuple(args) + (y,)))
                    break
    return report


# --------------------------------------------------------------------------
# constructions


def cyclic_group(m: int) -> FinitePolyring:
    idx = np.arange(m)
    return FinitePolyring((idx[:, None] + idx[None, :]) % m, (-idx) % m, {}, {}, f"z{m}-group")


def cyclic_ring(m: int, op: str = "m") -> FinitePolyring:
    idx = np.arange(m)
    return cyclic_group(m).with_ops({op: (idx[:, None] * idx[None, :]) % m}, f"z{m}-ring")


def boolean_power(k: int, op: str = "m") -> FinitePolyring:
    """The ring (F_2)^k; elements are bit masks, + is xor, product is and."""
    if k < 1:
        raise InstanceError("F_2^k needs k >= 1")
    idx = np.arange(2 ** k)
    return FinitePolyring(idx[:, None] ^ idx[None, :], idx, {op: idx[:, None] & idx[None, :]}, {}, f"f2^{k}")


@dataclass
class OpEnumeration:
    tables: list
    complete: bool
    mode: str
    examined: int = 0


def _is_multiadditive(add, table):
    for i in range(table.ndim):
        T = np.moveaxis(table, i, 0)
        if not np.array_equal(T[add], add[T[:, None, ...], T[None, :, ...]]):
            return False
    return True


def _cyclic_generator(group):
    m = group.size
    for g in range(m):
        if group.order(g) == m:
            return g
    return None


def enumerate_distributive_ops(group: FinitePolyring, arity: int, cap: int = 100_000,
                               mode: str = "auto") -> OpEnumeration:
    """All maps K^arity -> K additive in every coordinate.

    ``mode``: ``structural`` (cyclic groups: k * x1 * ... * xn through a
    generator), ``generators`` (extend assignments on generator tuples),
    ``brute`` (every table), or ``auto``.
    """
    if arity < 1:
        raise InstanceError("arity must be >= 1")
    m = group.size
    g = _cyclic_generator(group)
    if mode == "auto":
        mode = "structural" if g is not None else "generators"
    if mode == "structural":
        if g is None:
            raise InstanceError("structural enumeration needs a cyclic group")
        log = np.zeros(m, dtype=np.int64)
        power = np.zeros(m, dtype=np.int64)
        x = 0
        for i in range(m):
            log[x] = i
            power[i] = x
            x = group.plus(x, g)
        prod_logs = np.ones((m,) * arity, dtype=np.int64)
        for axis in range(arity):
            shape = [1] * arity
            shape[axis] = m
            prod_logs = prod_logs * log.reshape(shape) % m
        tables = [power[(k * prod_logs) % m] for k in range(m)]
        return OpEnumeration(tables, True, mode, m)
    if mode == "brute":
        return _enumerate_brute(group, arity, cap)
    if mode == "generators":
        return _enumerate_generators(group, arity, cap)
    raise InstanceError(f"unknown mode {mode!r}")


def _enumerate_brute(group, arity, cap):
    m = group.size
    cells = m ** arity
    tables, examined = [], 0
    complete = True
    for values in itertools.product(range(m), repeat=cells):
        if examined >= cap:
            complete = False
            break
        examined += 1
        t = np.array(values, dtype=np.int64).reshape((m,) * arity)
        if _is_multiadditive(group.add, t):
            tables.append(t)
    return OpEnumeration(tables, complete, "brute", examined)


def _generating_set(group):
    gens, span = [], {0}
    for a in group.elements():
        if a not in span:
            gens.append(a)
            # subgroup generated by the current gens
            frontier = list(span)
            span = set(span)
            while frontier:
                x = frontier.pop()
                for h in gens:
                    y = group.plus(x, h)
                    if y not in span:
                        span.add(y)
                        frontier.append(y)
    return gens


def _coefficients(group, gens):
    """One coefficient vector per element: a = sum c_j * gens[j]."""
    coeffs = {0: (0,) * len(gens)}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for j, h in enumerate(gens):
                y = group.plus(x, h)
                if y not in coeffs:
                    c = list(coeffs[x])
                    c[j] += 1
                    coeffs[y] = tuple(c)
                    nxt.append(y)
        frontier = nxt
    return coeffs


def _enumerate_generators(group, arity, cap):
    m = group.size
    gens = _generating_set(group)
    r = len(gens)
    coeffs = _coefficients(group, gens)
    gen_tuples = list(itertools.product(range(r), repeat=arity))
    points = list(itertools.product(range(m), repeat=arity))
    # coefficient of each generator tuple in each point's expansion
    weights = np.array([[math.prod(coeffs[p[i]][t[i]] for i in range(arity)) for t in gen_tuples]
                        for p in points], dtype=np.int64)
    mult = np.array([[group.mul_by_int(k, a) for a in range(m)] for k in range(int(weights.max()) + 1)])
    tables, examined, complete = [], 0, True
    for assignment in itertools.product(range(m), repeat=len(gen_tuples)):
        if examined >= cap:
            complete = False
            break
        examined += 1
        contrib = mult[weights, np.array(assignment)[None, :]]  # (points, gen tuples)
        acc = np.zeros(len(points), dtype=np.int64)
        for col in range(contrib.shape[1]):
            acc = group.add[acc, contrib[:, col]]
        t = acc.reshape((m,) * arity)
        if _is_multiadditive(group.add, t):
            tables.append(t)
    return OpEnumeration(tables, complete, "generators", examined)


def groupoid_ring(g: FiniteGroupoid, modulus: int, support_bound: int | None = None,
                  limit: int = 4096, op: str = "m") -> FinitePolyring:
    """Formal Z_modulus-combinations of groupoid elements with convolution.

    The support is the subgroupoid generated by the first ``support_bound``
    elements of ``g`` (all of ``g`` by default).  Element encoding: the
    coefficient vector c (indexed by support order) maps to sum c_j * m^j.
    """
    if modulus < 2:
        raise InstanceError("modulus must be >= 2")
    s = g.size if support_bound is None else support_bound
    if not 1 <= s <= g.size:
        raise InstanceError(f"support bound must lie in 1..{g.size}")
    support = list(range(s))
    seen = set(support)
    i = 0
    while i < len(support):
        for b in list(support[: i + 1]):
            for c in (g(support[i], b), g(b, support[i])):
                if c not in seen:
                    seen.add(c)
                    support.append(c)
        i += 1
    support.sort()
    k = len(support)
    if modulus ** k > limit:
        raise InstanceError(f"carrier size {modulus}^{k} exceeds limit {limit}")
    pos = {a: j for j, a in enumerate(support)}
    size = modulus ** k
    digits = np.array([[(e // modulus ** j) % modulus for j in range(k)] for e in range(size)], dtype=np.int64)
    weights = modulus ** np.arange(k, dtype=np.int64)
    add = ((digits[:, None, :] + digits[None, :, :]) % modulus) @ weights
    neg = ((-digits) % modulus) @ weights
    conv = np.zeros((size, size, k), dtype=np.int64)
    for a in support:
        for b in support:
            c = pos[g(a, b)]
            conv[:, :, c] += digits[:, None, pos[a]] * digits[None, :, pos[b]]
    mul = (conv % modulus) @ weights
    return FinitePolyring(add, neg, {op: mul}, {}, f"groupoid-ring(m={modulus},k={k})")


def indicator(support_index: int, modulus: int) -> int:
    """Element encoding the formal sum 1 * (support element ``support_index``)."""
    return modulus ** support_index


def direct_product(instances: Sequence[FinitePolyring]) -> FinitePolyring:
    """Componentwise product; element (a_1..a_r) encodes row-major (a_1 slowest)."""
    if not instances:
        raise InstanceError("direct product of no instances")
    sig = instances[0].signature
    for inst in instances[1:]:
        if inst.signature != sig:
            raise InstanceError("signature mismatch in direct product")
    sizes = [inst.size for inst in instances]
    total = math.prod(sizes)
    comps = np.indices(sizes).reshape(len(sizes), -1)  # (r, total)
    strides = np.array([math.prod(sizes[i + 1:]) for i in range(len(sizes))], dtype=np.int64)

    def combine(parts):
        out = 0
        for s, p in zip(strides, parts):
            out = out + s * p
        return out

    add = combine([inst.add[c[:, None], c[None, :]] for inst, c in zip(instances, comps)])
    neg = combine([inst.neg[c] for inst, c in zip(instances, comps)])
    ops = {}
    for op_name, arity in sig.ops:
        parts = []
        for inst, c in zip(instances, comps):
            idx = tuple(c.reshape([total if i == j else 1 for j in range(arity)]) for i in range(arity))
            parts.append(inst.ops[op_name][idx])
        ops[op_name] = combine(parts)
    name = " x ".join(inst.name or "?" for inst in instances)
    return FinitePolyring(add, neg, ops, {}, name)


# --------------------------------------------------------------------------
# files


def _table(data, m, arity):
    return np.array(data, dtype=np.int64).reshape((m,) * arity)


def load_instance(source):
    """Instance from a JSON document (dict, JSON text, or file path)."""
    if isinstance(source, Mapping):
        doc = source
    else:
        text = str(source)
        if not text.lstrip().startswith("{"):
            with open(text, encoding="utf-8") as fh:
                text = fh.read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InstanceError(f"malformed instance JSON: {exc}") from None
    try:
        if "dimension" in doc:
            return SymbolicPolyring(int(doc["dimension"]), tuple(doc.get("ops", ())),
                                    doc.get("constants", {}), doc.get("name", ""))
        m = int(doc["size"])
        if "mul" in doc and "add" not in doc:
            return FiniteGroupoid(_table(doc["mul"], m, 2), doc.get("name", ""))
        ops = {k: _table(v["table"], m, int(v["arity"])) for k, v in doc.get("ops", {}).items()}
        return FinitePolyring(_table(doc["add"], m, 2), _table(doc["neg"], m, 1), ops,
                              doc.get("constants", {}), doc.get("name", ""))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InstanceError):
            raise
        raise InstanceError(f"malformed instance document: {exc}") from None


def instance_to_json(instance) -> dict:
    if isinstance(instance, SymbolicPolyring):
        return {"name": instance.name, "dimension": instance.dimension,
                "ops": [{"name": s.name, "kind": s.kind, "params": dict(s.params)} for s in instance.ops],
                "constants": {k: list(v) for k, v in instance.constants.items()}}
    if isinstance(instance, FiniteGroupoid):
        return {"name": instance.name, "size": instance.size, "mul": instance.mul.ravel().tolist()}
    return {
        "name": instance.name,
        "size": instance.size,
        "add": instance.add.ravel().tolist(),
        "neg": instance.neg.tolist(),
        "ops": {k: {"arity": int(t.ndim), "table": t.ravel().tolist()} for k, t in instance.ops.items()},
        "constants": dict(instance.constants),
    }


_NAMED = [
    (re.compile(r"z(\d+)-group\Z"), lambda m: cyclic_group(int(m.group(1)))),
    (re.compile(r"z(\d+)-ring\Z"), lambda m: cyclic_ring(int(m.group(1)))),
    (re.compile(r"f2\^(\d+)\Z"), lambda m: boolean_power(int(m.group(1)))),
    (re.compile(r"z-group\Z"), lambda m: SymbolicPolyring(1, (), name="z-group")),
    (re.compile(r"z-ring\Z"), lambda m: SymbolicPolyring(1, ({"name": "m", "kind": "product"},), name="z-ring")),
]


def named_instance(spec: str):
    """Builtin instance by name (``z6-ring``, ``z2-group``, ``f2^3``, ``z-ring``) or a JSON path."""
    if spec.endswith(".json") and not os.path.exists(spec):
        spec = spec[: -len(".json")]
    for pattern, make in _NAMED:
        m = pattern.match(spec)
        if m:
            return make(m)
    return load_instance(spec)
