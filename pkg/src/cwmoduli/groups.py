"""Finite groups as dense multiplication tables, plus the builders the CLI exposes.

Element ids are dense integers 0..|G|-1 with 0 the identity. Everything
downstream (conjugacy classes, class matrices, closures) reduces to table
lookups, which keeps exhaustive verification cheap at desk scale.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .errors import GroupSizeError, GroupSpecError

__all__ = [
    "DEFAULT_ORDER_CAP",
    "FiniteGroup",
    "ConjugacyData",
    "MetacyclicParams",
    "build_cyclic",
    "build_abelian",
    "build_metacyclic",
    "build_from_permutations",
    "build_from_table",
    "conjugacy_classes",
    "closure",
    "generates",
    "group_from_spec",
]

DEFAULT_ORDER_CAP = 512

# Exhaustive associativity checking is O(n^3); past this order it is skipped.
VERIFY_ORDER_LIMIT = 256


class FiniteGroup:
    """A finite group given by its full multiplication table.

    The table is validated at construction: element 0 must be a two-sided
    identity, every element must have an inverse, and associativity is checked
    exhaustively for orders up to VERIFY_ORDER_LIMIT.
    """

    def __init__(self, table: Sequence[Sequence[int]], label: str = "",
                 *, order_cap: int = DEFAULT_ORDER_CAP):
        tbl = np.asarray(table, dtype=np.int64)
        if tbl.ndim != 2 or tbl.shape[0] != tbl.shape[1] or tbl.shape[0] == 0:
            raise ValueError("multiplication table must be a nonempty square matrix")
        n = int(tbl.shape[0])
        if n > order_cap:
            raise GroupSizeError(f"group order {n} exceeds the cap of {order_cap}")
        if tbl.min() < 0 or tbl.max() >= n:
            raise ValueError("table entries must be element ids in 0..order-1")
        _check_group_axioms(tbl)
        tbl.flags.writeable = False
        self._table = tbl
        self.order = n
        self.label = label or f"table of order {n}"
        self._inv = _inverse_map(tbl)
        self._inv.flags.writeable = False
        self._orders = _element_orders(tbl)
        self._orders.flags.writeable = False
        self._exponent = int(lcm(*(int(o) for o in self._orders)))
        self._rows: Optional[List[List[int]]] = None

    @property
    def identity(self) -> int:
        return 0

    @property
    def mul_table(self) -> np.ndarray:
        return self._table

    @property
    def inv_table(self) -> np.ndarray:
        return self._inv

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def inv(self, a: int) -> int:
        return int(self._inv[a])

    def power(self, a: int, k: int) -> int:
        """a**k for any integer k, reduced through the element order."""
        k %= self.elem_order(a)
        acc = 0
        for _ in range(k):
            acc = int(self._table[acc, a])
        return acc

    def elem_order(self, a: int) -> int:
        return int(self._orders[a])

    def element_orders(self) -> Tuple[int, ...]:
        return tuple(int(o) for o in self._orders)

    def exponent(self) -> int:
        """lcm of all element orders."""
        return self._exponent

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self._table, self._table.T))

    def mul_rows(self) -> List[List[int]]:
        """Table as nested lists; faster than numpy scalar indexing in hot loops."""
        if self._rows is None:
            self._rows = self._table.tolist()
        return self._rows


def _check_group_axioms(tbl: np.ndarray) -> None:
    n = tbl.shape[0]
    idx = np.arange(n)
    if not (np.array_equal(tbl[0], idx) and np.array_equal(tbl[:, 0], idx)):
        raise ValueError("element 0 is not a two-sided identity")
    if not (np.array_equal(np.sort(tbl, axis=1), np.broadcast_to(idx, (n, n)))
            and np.array_equal(np.sort(tbl, axis=0), np.broadcast_to(idx[:, None], (n, n)))):
        raise ValueError("each row and column of the table must be a permutation")
    if n <= VERIFY_ORDER_LIMIT:
        for a in range(n):
            # (a*b)*c == a*(b*c) for all b, c
            if not np.array_equal(tbl[tbl[a]], tbl[a][tbl]):
                raise ValueError(f"multiplication is not associative (first failure at a={a})")


def _inverse_map(tbl: np.ndarray) -> np.ndarray:
    rows, cols = np.nonzero(tbl == 0)
    inv = np.empty(tbl.shape[0], dtype=np.int64)
    inv[rows] = cols
    return inv


def _element_orders(tbl: np.ndarray) -> np.ndarray:
    n = tbl.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    orders[0] = 1
    cur = np.arange(n)
    base = np.arange(n)
    k = 1
    while (orders == 0).any():
        k += 1
        cur = tbl[cur, base]
        hit = (orders == 0) & (cur == 0)
        orders[hit] = k
        if k > n:
            raise ValueError("table has an element of order exceeding the group order")
    return orders


class ConjugacyData:
    """Conjugacy classes of a group, with power maps precomputed.

    Classes are ordered by their smallest member, so class 0 is always the
    identity class. power_class[i, j] is the class of r**j for any r in class i,
    for every exponent j in 0..exponent-1.
    """

    def __init__(self, group: FiniteGroup, class_of: np.ndarray,
                 representatives: Tuple[int, ...], class_sizes: Tuple[int, ...],
                 power_class: np.ndarray):
        self.group = group
        self.class_of = class_of
        self.representatives = representatives
        self.class_sizes = class_sizes
        self.power_class = power_class

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    def inverse_class(self, i: int) -> int:
        """Class index of the inverses of class i."""
        e = self.group.exponent()
        return int(self.power_class[i, (e - 1) % e])

    def members(self, i: int) -> np.ndarray:
        return np.nonzero(self.class_of == i)[0]


def conjugacy_classes(G: FiniteGroup) -> ConjugacyData:
    """Compute conjugacy classes by exhaustive conjugation."""
    n = G.order
    tbl = G.mul_table
    inv = G.inv_table
    all_h = np.arange(n)
    class_of = np.full(n, -1, dtype=np.int64)
    reps: List[int] = []
    for g in range(n):
        if class_of[g] >= 0:
            continue
        orbit = np.unique(tbl[tbl[all_h, g], inv])
        class_of[orbit] = len(reps)
        reps.append(g)
    sizes = tuple(int((class_of == i).sum()) for i in range(len(reps)))
    e = G.exponent()
    power_class = np.zeros((len(reps), e), dtype=np.int64)
    for i, r in enumerate(reps):
        cur = 0
        for j in range(e):
            power_class[i, j] = class_of[cur]
            cur = int(tbl[cur, r])
    class_of.flags.writeable = False
    power_class.flags.writeable = False
    return ConjugacyData(G, class_of, tuple(reps), sizes, power_class)


def closure(G: FiniteGroup, S: Iterable[int]) -> Set[int]:
    """The subgroup generated by S, as a set of element ids."""
    rows = G.mul_rows()
    gens = sorted(set(S))
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = rows[x]
            for s in gens:
                y = row[s]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def generates(G: FiniteGroup, S: Iterable[int]) -> bool:
    """True iff the closure of S under multiplication equals all of G."""
    return len(closure(G, S)) == G.order


@dataclass(frozen=True)
class MetacyclicParams:
    """Parameters (m, n, r) of the presentation <x, y | x^m, y^n, y x y^-1 = x^r>."""

    m: int
    n: int
    r: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be positive, got m={self.m}, n={self.n}")
        if not 1 <= self.r <= self.m:
            raise ValueError(f"r must satisfy 1 <= r <= m, got r={self.r} with m={self.m}")
        if (self.r ** self.n - 1) % self.m != 0:
            raise ValueError(
                f"r^n = {self.r}^{self.n} is not 1 mod m = {self.m}; "
                "the presentation does not define a group of order m*n")


def build_cyclic(n: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Z/nZ with addition; element k has id k."""
    if n < 1:
        raise ValueError(f"cyclic order must be positive, got {n}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, f"cyclic:{n}", order_cap=order_cap)


def build_abelian(factors: Sequence[int], *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Direct product of cyclic groups, components added pointwise.

    Element ids encode tuples lexicographically: the leftmost factor is the
    most significant digit, so (0,...,0) is id 0.
    """
    factors = tuple(int(f) for f in factors)
    if not factors:
        raise ValueError("abelian factor list must be nonempty")
    if any(f < 1 for f in factors):
        raise ValueError(f"abelian factors must be positive, got {factors}")
    n = 1
    for f in factors:
        n *= f
    if n > order_cap:
        raise GroupSizeError(f"group order {n} exceeds the cap of {order_cap}")
    coords = np.unravel_index(np.arange(n), factors)
    sums = tuple((c[:, None] + c[None, :]) % f for c, f in zip(coords, factors))
    table = np.ravel_multi_index(sums, factors)
    return FiniteGroup(table, "abelian:" + ",".join(str(f) for f in factors),
                       order_cap=order_cap)


def build_metacyclic(p: MetacyclicParams, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Split metacyclic group <x, y | x^m, y^n, y x y^-1 = x^r> of order m*n.

    Element x^i y^j has id i*n + j, so the identity is id 0 and pairs are
    ordered lexicographically by (x-exponent, y-exponent).
    """
    m, n, r = p.m, p.n, p.r
    total = m * n
    if total > order_cap:
        raise GroupSizeError(f"group order {total} exceeds the cap of {order_cap}")
    ids = np.arange(total)
    xi, yj = np.divmod(ids, n)
    # y^j x = x^(r^j) y^j, hence (x^i y^j)(x^k y^l) = x^(i + k r^j) y^(j + l)
    rpow = np.array([pow(r, int(j), m) for j in range(n)], dtype=np.int64)
    X = (xi[:, None] + xi[None, :] * rpow[yj][:, None]) % m
    Y = (yj[:, None] + yj[None, :]) % n
    return FiniteGroup(X * n + Y, f"metacyclic:{m},{n},{r}", order_cap=order_cap)


def _parse_cycle_string(text: str) -> List[List[int]]:
    body = text.strip()
    if body in ("", "()"):
        return []
    if not re.fullmatch(r"(\s*\(\s*\d+(\s*,\s*\d+)*\s*\)\s*)+", body):
        raise GroupSpecError(f"malformed cycle notation: {text!r}")
    cycles = []
    for inner in re.findall(r"\(([^()]*)\)", body):
        pts = [int(t) for t in re.split(r"[,\s]+", inner.strip()) if t]
        if any(p < 1 for p in pts):
            raise GroupSpecError(f"cycle points must be >= 1 in {text!r}")
        if len(set(pts)) != len(pts):
            raise GroupSpecError(f"cycle repeats a point: {text!r}")
        if pts:
            cycles.append(pts)
    return cycles


def build_from_permutations(generator_strs: Sequence[str],
                            *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Group generated by permutations in cycle notation on points 1..k.

    Products compose left to right: (p*q)(point) = q(p(point)). Element ids
    follow breadth-first discovery from the identity, so they are stable for a
    fixed generator list.
    """
    all_cycles = [_parse_cycle_string(s) for s in generator_strs]
    degree = max((p for cs in all_cycles for c in cs for p in c), default=1)
    gens: List[Tuple[int, ...]] = []
    for cycles in all_cycles:
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b - 1
        gens.append(tuple(images))
    ident = tuple(range(degree))
    ids: Dict[Tuple[int, ...], int] = {ident: 0}
    elems: List[Tuple[int, ...]] = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for q in gens:
                prod = tuple(q[i] for i in p)
                if prod not in ids:
                    if len(elems) >= order_cap:
                        raise GroupSizeError(
                            f"permutation closure exceeds the cap of {order_cap}")
                    ids[prod] = len(elems)
                    elems.append(prod)
                    nxt.append(prod)
        frontier = nxt
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for a, p in enumerate(elems):
        for b, q in enumerate(elems):
            table[a, b] = ids[tuple(q[i] for i in p)]
    label = "perm:" + ";".join(s.strip() for s in generator_strs)
    return FiniteGroup(table, label, order_cap=order_cap)


def build_from_table(source, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Group from a JSON object {"order": N, "mul": [[...]]} or a path to one."""
    if isinstance(source, (str,)):
        try:
            with open(source, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise GroupSpecError(f"cannot read table file {source!r}: {exc}") from exc
        label = f"table:{source}"
    else:
        data = source
        label = ""
    if not isinstance(data, dict) or "order" not in data or "mul" not in data:
        raise GroupSpecError('table JSON must be {"order": N, "mul": [[...]]}')
    try:
        G = FiniteGroup(data["mul"], label, order_cap=order_cap)
    except (ValueError, TypeError) as exc:
        raise GroupSpecError(f"table is not a valid group: {exc}") from exc
    if G.order != data["order"]:
        raise GroupSpecError(
            f"declared order {data['order']} does not match table size {G.order}")
    return G


def _parse_ints(text: str, what: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise GroupSpecError(f"malformed {what} in group spec: {text!r}") from exc


def group_from_spec(spec: str, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from a specification string.

    Grammar: cyclic:n | abelian:n1,n2,... | metacyclic:m,n,r |
    perm:cycles;cycles;... | table:<path>.
    """
    m = re.fullmatch(r"(cyclic|abelian|metacyclic|perm|table):(.*)", spec.strip(),
                     flags=re.DOTALL)
    if not m:
        raise GroupSpecError(f"unknown group spec {spec!r}")
    kind, arg = m.group(1), m.group(2)
    if kind == "cyclic":
        vals = _parse_ints(arg, "cyclic order")
        if len(vals) != 1 or vals[0] < 1:
            raise GroupSpecError(f"cyclic spec needs one positive integer: {spec!r}")
        return build_cyclic(vals[0], order_cap=order_cap)
    if kind == "abelian":
        vals = _parse_ints(arg, "factor list")
        if not vals or any(v < 1 for v in vals):
            raise GroupSpecError(f"abelian spec needs positive factors: {spec!r}")
        return build_abelian(vals, order_cap=order_cap)
    if kind == "metacyclic":
        vals = _parse_ints(arg, "parameter list")
        if len(vals) != 3:
            raise GroupSpecError(f"metacyclic spec needs m,n,r: {spec!r}")
        return build_metacyclic(MetacyclicParams(*vals), order_cap=order_cap)
    if kind == "perm":
        parts = [s for s in arg.split(";") if s.strip()]
        return build_from_permutations(parts, order_cap=order_cap)
    return build_from_table(arg.strip(), order_cap=order_cap)
