"""Terms over polyring signatures and their polynomial normal forms.

A term is built from variables ``x1, x2, ...``, constants, ``0``, binary
``+``, unary ``-`` and applications of the signature's operations.  Every
operation is additive in each coordinate, so distributing over sums turns
any term into a signed multiset of ``+``-free monomials.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Signature", "Term", "Var", "Const", "Zero", "Sum", "Neg", "App",
    "Polynomial", "ParseError", "TermError", "DegreeError",
    "parse_term", "to_text", "normalize", "degree", "substitute",
    "variables", "max_var", "depth", "sum_decompose", "shift_decompose", "random_term",
]


class TermError(ValueError):
    pass


class ParseError(TermError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class DegreeError(TermError):
    """Raised when a construction needs a term of nonzero degree."""


_RESERVED = {"0", "+", "-"}
_VAR_RE = re.compile(r"x([0-9]+)\Z")


@dataclass(frozen=True)
class Signature:
    ops: tuple = ()

    def __post_init__(self):
        names = [name for name, _ in self.ops]
        if len(set(names)) != len(names):
            raise TermError(f"duplicate operation names in {names}")
        for name, arity in self.ops:
            if name in _RESERVED or _VAR_RE.match(name) or not re.match(r"[A-Za-z_]\w*\Z", name):
                raise TermError(f"invalid operation name {name!r}")
            if int(arity) < 1:
                raise TermError(f"operation {name!r} needs arity >= 1")

    @classmethod
    def of(cls, **arities):
        return cls(tuple(sorted(arities.items())))

    def arity(self, name):
        for op, arity in self.ops:
            if op == name:
                return arity
        raise KeyError(name)

    def __contains__(self, name):
        return any(op == name for op, _ in self.ops)


# --------------------------------------------------------------------------
# syntax tree


class Term:
    __slots__ = ()

    def __str__(self):
        return to_text(self)

    def __add__(self, other):
        return Sum(self, other)

    def __neg__(self):
        return Neg(self)

    def __sub__(self, other):
        return Sum(self, Neg(other))


@dataclass(frozen=True)
class Var(Term):
    index: int


@dataclass(frozen=True)
class Const(Term):
    # int: carrier element index ("#3"); str: named symbolic constant
    value: Union[int, str]


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Sum(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class App(Term):
    op: str
    args: tuple

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))


def to_text(term) -> str:
    if isinstance(term, Polynomial):
        return str(term)
    if isinstance(term, Var):
        return f"x{term.index}"
    if isinstance(term, Const):
        return f"#{term.value}" if isinstance(term.value, int) else term.value
    if isinstance(term, Zero):
        return "0"
    if isinstance(term, Sum):
        return f"({to_text(term.left)} + {to_text(term.right)})"
    if isinstance(term, Neg):
        return "-" + to_text(term.arg)
    if isinstance(term, App):
        return f"{term.op}({','.join(to_text(a) for a in term.args)})"
    raise TypeError(f"not a term: {term!r}")


def _children(term):
    if isinstance(term, Sum):
        return (term.left, term.right)
    if isinstance(term, Neg):
        return (term.arg,)
    if isinstance(term, App):
        return term.args
    return ()


def _walk(term) -> Iterator[Term]:
    stack = [term]
    while stack:
        t = stack.pop()
        yield t
        stack.extend(_children(t))


def variables(term) -> set:
    if isinstance(term, Polynomial):
        return set().union(*(variables(b) for _, b in term)) if term else set()
    return {t.index for t in _walk(term) if isinstance(t, Var)}


def max_var(term) -> int:
    return max(variables(term), default=0)


def depth(term) -> int:
    kids = _children(term)
    return 1 + max((depth(k) for k in kids), default=0)


# --------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"\s*(?:(?P<ident>[A-Za-z_]\w*)|#(?P<elem>[0-9]+)|(?P<num>[0-9]+)|(?P<punct>[(),+\-]))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, signature, var_count):
        self.tokens = _tokenize(text)
        self.i = 0
        self.signature = signature
        self.var_count = var_count

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None):
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            shown = tok[1] or "end of input"
            raise ParseError(f"expected {value!r}, found {shown!r}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        left = self.unary()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "punct":
            op = self.take()[1]
            right = self.unary()
            left = Sum(left, right if op == "+" else Neg(right))
        return left

    def unary(self):
        if self.peek()[1] == "-" and self.peek()[0] == "punct":
            self.take()
            return Neg(self.unary())
        return self.primary()

    def primary(self):
        kind, value, pos = self.take()
        if kind == "num":
            if value != "0":
                raise ParseError(f"bare number {value!r}; carrier elements are written #{value}", pos)
            return Zero()
        if kind == "elem":
            return Const(int(value))
        if kind == "punct" and value == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "ident":
            m = _VAR_RE.match(value)
            if m:
                index = int(m.group(1))
                if index < 1:
                    raise ParseError("variables are numbered from x1", pos)
                if self.var_count is not None and index > self.var_count:
                    raise ParseError(f"variable {value} exceeds declared count {self.var_count}", pos)
                return Var(index)
            if self.peek()[1] == "(":
                if value not in self.signature:
                    raise ParseError(f"unknown operation {value!r}", pos)
                self.take("(")
                args = [self.expr()]
                while self.peek()[1] == ",":
                    self.take()
                    args.append(self.expr())
                self.take(")")
                arity = self.signature.arity(value)
                if len(args) != arity:
                    raise ParseError(f"operation {value!r} has arity {arity}, got {len(args)} arguments", pos)
                return App(value, tuple(args))
            if value in self.signature:
                raise ParseError(f"operation {value!r} used without arguments", pos)
            return Const(value)
        shown = value or "end of input"
        raise ParseError(f"unexpected {shown!r}", pos)


def parse_term(text: str, signature: Signature = Signature(), var_count: int | None = None) -> Term:
    """Parse concrete syntax into a term.

    Accepts the fully parenthesised form produced by :func:`to_text` as well
    as unparenthesised chains ``a + b - c`` (left associated, ``a - b`` being
    ``a + -b``).
    """
    parser = _Parser(text, signature, var_count)
    term = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input {value!r}", pos)
    return term


def check_term(term, signature: Signature, var_count=None):
    for t in _walk(term):
        if isinstance(t, App):
            if t.op not in signature:
                raise TermError(f"unknown operation {t.op!r}")
            if len(t.args) != signature.arity(t.op):
                raise TermError(f"arity mismatch for {t.op!r}")
        elif isinstance(t, Var) and (t.index < 1 or (var_count is not None and t.index > var_count)):
            raise TermError(f"variable x{t.index} out of range")


# --------------------------------------------------------------------------
# polynomials


def _key(body):
    return to_text(body)


class Polynomial:
    """Canceled signed multiset of monomials, kept in canonical order.

    Equal bodies of equal sign are kept with multiplicity; bodies of opposite
    sign cancel pairwise.
    """

    __slots__ = ("_items",)

    def __init__(self, monomials: Iterable = ()):
        net = Counter()
        for sign, body in monomials:
            if sign not in (1, -1):
                raise TermError(f"bad sign {sign}")
            net[body] += sign
        items = []
        for body, count in net.items():
            sign = 1 if count > 0 else -1
            items.extend([(sign, body)] * abs(count))
        items.sort(key=lambda sb: (_key(sb[1]), sb[0]))
        self._items = tuple(items)

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def __bool__(self):
        return bool(self._items)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __add__(self, other):
        return Polynomial(self._items + tuple(other))

    def __neg__(self):
        return Polynomial((-s, b) for s, b in self._items)

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        if not self._items:
            return "0"
        parts = [to_text(b) if s > 0 else "- " + to_text(b) for s, b in self._items]
        return " + ".join(parts)

    @property
    def monomials(self):
        return self._items

    def to_term(self) -> Term:
        if not self._items:
            return Zero()
        pieces = [b if s > 0 else Neg(b) for s, b in self._items]
        return reduce(Sum, pieces)

    def counts(self) -> Counter:
        c = Counter()
        for s, b in self._items:
            c[b] += s
        return c


def _expand(term):
    """List of (sign, body) pairs, not yet canceled."""
    if isinstance(term, (Var, Const)):
        return [(1, term)]
    if isinstance(term, Zero):
        return []
    if isinstance(term, Sum):
        return _expand(term.left) + _expand(term.right)
    if isinstance(term, Neg):
        return [(-s, b) for s, b in _expand(term.arg)]
    if isinstance(term, App):
        parts = [_expand(a) for a in term.args]
        out = []
        # an empty coordinate (zero) annihilates the whole application
        for choice in product(*parts):
            sign = 1
            for s, _ in choice:
                sign *= s
            out.append((sign, App(term.op, tuple(b for _, b in choice))))
        return out
    if isinstance(term, Polynomial):
        return list(term)
    raise TypeError(f"not a term: {term!r}")


def normalize(term) -> Polynomial:
    if isinstance(term, Polynomial):
        return term
    return Polynomial(_expand(term))


def _occurrences(body, vars):
    return sum(1 for t in _walk(body) if isinstance(t, Var) and (vars is None or t.index in vars))


def degree(p, vars=None) -> int:
    """Degree w.r.t. ``vars`` (all variables if None).

    Raw terms are measured on their canceled normal form, which bounds the
    minimal degree over all polynomial representatives from above.
    """
    if vars is not None:
        vars = frozenset(vars)
    poly = normalize(p)
    return max((_occurrences(b, vars) for _, b in poly), default=0)


def substitute(term, bindings: Mapping[int, Term]):
    if isinstance(term, Polynomial):
        return Polynomial(_expand(substitute(term.to_term(), bindings)))
    if isinstance(term, Var):
        return bindings.get(term.index, term)
    if isinstance(term, (Const, Zero)):
        return term
    if isinstance(term, Sum):
        return Sum(substitute(term.left, bindings), substitute(term.right, bindings))
    if isinstance(term, Neg):
        return Neg(substitute(term.arg, bindings))
    if isinstance(term, App):
        return App(term.op, tuple(substitute(a, bindings) for a in term.args))
    raise TypeError(f"not a term: {term!r}")


def sum_decompose(F, n: int | None = None) -> Polynomial:
    """G with F(x+y) = F(x) + F(y) + G(x, y), y_i written as x_{n+i}.

    The x-degree of G is strictly below the degree of F.
    """
    n = max_var(F) if n is None else n
    if max_var(F) > n:
        raise TermError(f"term uses x{max_var(F)} but n={n}")
    poly = normalize(F)
    if degree(poly) == 0:
        raise DegreeError("sum decomposition needs a term of nonzero degree")
    shifted = {i: Sum(Var(i), Var(n + i)) for i in range(1, n + 1)}
    to_y = {i: Var(n + i) for i in range(1, n + 1)}
    expanded = normalize(substitute(poly.to_term(), shifted))
    return expanded - poly - normalize(substitute(poly.to_term(), to_y))


def shift_decompose(F, point, instance, n: int | None = None) -> Polynomial:
    """H with F(x + a) = F(x) + H(x) over ``instance``; deg H < deg F.

    Variable-free monomials of H are folded into a single constant.
    """
    from .algebras import evaluate

    n = max_var(F) if n is None else n
    point = tuple(point)
    if len(point) != n:
        raise TermError(f"point has dimension {len(point)}, expected {n}")
    G = sum_decompose(F, n)
    consts = {n + i + 1: instance.constant_term(a) for i, a in enumerate(point)}
    shifted = normalize(substitute(G, consts))
    symbolic = [(s, b) for s, b in shifted if _occurrences(b, None)]
    value = instance.plus(evaluate(F, instance, point),
                         evaluate(Polynomial((s, b) for s, b in shifted if not _occurrences(b, None)),
                                  instance, point))
    if value != instance.zero:
        symbolic.extend(normalize(instance.constant_term(value)))
    return Polynomial(symbolic)


def random_term(rng, signature: Signature, n: int, depth: int = 3, constants=(), p_leaf: float = 0.3) -> Term:
    """Random term of depth <= ``depth`` drawn with a numpy Generator."""
    leaves = [Var(i) for i in range(1, n + 1)] + [Zero()] + [Const(c) for c in constants]
    if depth <= 1 or rng.random() < p_leaf:
        return leaves[int(rng.integers(len(leaves)))]
    kinds = ["sum", "neg"] + [name for name, _ in signature.ops] * 2
    kind = kinds[int(rng.integers(len(kinds)))]
    if kind == "sum":
        return Sum(random_term(rng, signature, n, depth - 1, constants, p_leaf),
                   random_term(rng, signature, n, depth - 1, constants, p_leaf))
    if kind == "neg":
        return Neg(random_term(rng, signature, n, depth - 1, constants, p_leaf))
    return App(kind, tuple(random_term(rng, signature, n, depth - 1, constants, p_leaf)
                           for _ in range(signature.arity(kind))))
