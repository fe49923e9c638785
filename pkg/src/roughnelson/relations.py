"""Finite universes and binary relations stored as bitset adjacency rows.

Element ``i`` of a universe corresponds to bit ``1 << i``; ``R.rows[i]`` is the
bitset of ``R(x_i) = {y | x_i R y}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

CLOSURE_MODES = ("none", "reflexive", "transitive", "reflexive_transitive")


def iter_bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Universe:
    elements: tuple[str, ...]

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        if len(set(elements)) != len(elements):
            seen = set()
            dup = next(e for e in elements if e in seen or seen.add(e))
            raise InputError(f"duplicate universe element {dup!r}")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, name):
        return name in self._index

    def index(self, name) -> int:
        try:
            return self._index[str(name)]
        except KeyError:
            raise InputError(f"unknown element {name!r}") from None

    def mask(self, names: Iterable) -> int:
        m = 0
        for n in names:
            m |= 1 << self.index(n)
        return m

    def names(self, mask: int) -> frozenset[str]:
        if mask >> len(self.elements):
            raise InputError("bitset has bits outside the universe")
        return frozenset(self.elements[i] for i in iter_bits(mask))

    def sorted_names(self, mask: int) -> list[str]:
        """Names of the members of ``mask`` in declaration order."""
        return [self.elements[i] for i in iter_bits(mask)]


def as_universe(u) -> Universe:
    if isinstance(u, Universe):
        return u
    return Universe(tuple(u))


@dataclass(frozen=True)
class BinaryRelation:
    universe: Universe
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.universe.size:
            raise InputError("one adjacency row per universe element required")
        full = self.universe.full
        for r in self.rows:
            if r & ~full:
                raise InputError("adjacency row refers to elements outside the universe")

    @cached_property
    def cols(self) -> tuple[int, ...]:
        """``cols[j]`` is the bitset of ``{x | x R y_j}``."""
        n = self.universe.size
        cols = [0] * n
        for i, r in enumerate(self.rows):
            for j in iter_bits(r):
                cols[j] |= 1 << i
        return tuple(cols)

    @property
    def size(self) -> int:
        return self.universe.size

    def holds(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> list[tuple[str, str]]:
        el = self.universe.elements
        return [(el[i], el[j]) for i, r in enumerate(self.rows) for j in iter_bits(r)]

    def matrix(self) -> np.ndarray:
        n = self.size
        m = np.zeros((n, n), dtype=bool)
        for i, r in enumerate(self.rows):
            for j in iter_bits(r):
                m[i, j] = True
        return m

    def inverse(self) -> BinaryRelation:
        return BinaryRelation(self.universe, self.cols)

    def __len__(self):
        return sum(popcount(r) for r in self.rows)

    def __repr__(self):
        return f"BinaryRelation({list(self.universe)}, {self.pairs()})"


def _reflexive(rows: list[int]) -> list[int]:
    return [r | (1 << i) for i, r in enumerate(rows)]


def _transitive(rows: list[int]) -> list[int]:
    rows = list(rows)
    n = len(rows)
    for k in range(n):
        bit, rk = 1 << k, rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return rows


def close_rows(rows: Sequence[int], closure_mode: str) -> tuple[int, ...]:
    if closure_mode not in CLOSURE_MODES:
        raise InputError(f"unknown closure mode {closure_mode!r}; expected one of {CLOSURE_MODES}")
    rows = list(rows)
    if closure_mode in ("reflexive", "reflexive_transitive"):
        rows = _reflexive(rows)
    if closure_mode in ("transitive", "reflexive_transitive"):
        rows = _transitive(rows)
    return tuple(rows)


def build_relation(universe, pairs: Iterable[tuple], closure_mode: str = "none") -> BinaryRelation:
    """Relation containing exactly ``pairs`` plus the least requested closure."""
    u = as_universe(universe)
    rows = [0] * u.size
    for pair in pairs:
        try:
            x, y = pair
        except (TypeError, ValueError):
            raise InputError(f"pair {pair!r} is not an (x, y) pair") from None
        rows[u.index(x)] |= 1 << u.index(y)
    return BinaryRelation(u, close_rows(rows, closure_mode))


def identity_relation(universe) -> BinaryRelation:
    u = as_universe(universe)
    return BinaryRelation(u, tuple(1 << i for i in range(u.size)))


def full_relation(universe) -> BinaryRelation:
    u = as_universe(universe)
    return BinaryRelation(u, (u.full,) * u.size)


def chain_order(n: int) -> BinaryRelation:
    """The usual order on ``{1..n}``."""
    u = Universe(tuple(str(i) for i in range(1, n + 1)))
    return BinaryRelation(u, tuple(u.full & ~((1 << i) - 1) for i in range(n)))


def equivalence_from_blocks(blocks: Sequence[Sequence[str]]) -> BinaryRelation:
    names = [x for b in blocks for x in b]
    u = Universe(tuple(names))
    rows = [0] * u.size
    for b in blocks:
        m = u.mask(b)
        for x in b:
            rows[u.index(x)] = m
    return BinaryRelation(u, tuple(rows))


def _index_of(R: BinaryRelation, x) -> int:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        if not 0 <= x < R.size:
            raise InputError(f"element index {x} out of range")
        return int(x)
    return R.universe.index(x)


def neighborhood(R: BinaryRelation, x) -> frozenset[str]:
    return R.universe.names(R.rows[_index_of(R, x)])


def inverse_neighborhood(R: BinaryRelation, x) -> frozenset[str]:
    return R.universe.names(R.cols[_index_of(R, x)])


def is_reflexive(R: BinaryRelation) -> bool:
    return all(r >> i & 1 for i, r in enumerate(R.rows))


def is_transitive(R: BinaryRelation) -> bool:
    rows = R.rows
    for r in rows:
        acc = 0
        for j in iter_bits(r):
            acc |= rows[j]
        if acc & ~r:
            return False
    return True


def is_symmetric(R: BinaryRelation) -> bool:
    return R.rows == R.cols


def is_antisymmetric(R: BinaryRelation) -> bool:
    return all(r & c == 1 << i or r & c == 0 for i, (r, c) in enumerate(zip(R.rows, R.cols)))


def is_left_total(R: BinaryRelation) -> bool:
    return all(R.rows)


def is_quasiorder(R: BinaryRelation) -> bool:
    return is_reflexive(R) and is_transitive(R)


def is_equivalence(R: BinaryRelation) -> bool:
    return is_quasiorder(R) and is_symmetric(R)


def is_partial_order(R: BinaryRelation) -> bool:
    return is_quasiorder(R) and is_antisymmetric(R)


def connected_components(R: BinaryRelation) -> list[frozenset[str]]:
    """Classes of the least equivalence containing ``R``, ordered by first member."""
    n = R.size
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, r in enumerate(R.rows):
        for j in iter_bits(r):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, int] = {}
    for i in range(n):
        root = find(i)
        blocks[root] = blocks.get(root, 0) | 1 << i
    return [R.universe.names(m) for m in sorted(blocks.values(), key=lambda m: (m & -m))]


def restrict(R: BinaryRelation, names: Iterable[str]) -> BinaryRelation:
    """Restriction of ``R`` to a subset, keeping the universe's declaration order."""
    keep = R.universe.mask(names)
    idx = list(iter_bits(keep))
    sub = Universe(tuple(R.universe.elements[i] for i in idx))
    rows = []
    for i in idx:
        r = 0
        for k, j in enumerate(idx):
            if R.rows[i] >> j & 1:
                r |= 1 << k
        rows.append(r)
    return BinaryRelation(sub, tuple(rows))


def relabel(R: BinaryRelation, names: Sequence[str]) -> BinaryRelation:
    return BinaryRelation(Universe(tuple(names)), R.rows)


# -- enumeration and sampling of quasiorders ---------------------------------

def default_universe(n: int) -> Universe:
    return Universe(tuple(str(i) for i in range(1, n + 1)))


def enumerate_preorders(n: int) -> list[BinaryRelation]:
    """All labeled quasiorders on ``{1..n}``.

    Built one element at a time: the new element ``k`` gets an up-set ``U`` and
    a down-set ``D`` of the old order, admissible iff every ``d in D`` already
    relates to every ``u in U``.
    """
    u = default_universe(n)
    layer: list[tuple[int, ...]] = [()]
    for k in range(n):
        nxt = []
        for rows in layer:
            cols = [0] * k
            for i, r in enumerate(rows):
                for j in iter_bits(r):
                    cols[j] |= 1 << i
            up_sets = [m for m in range(1 << k) if all(rows[j] & ~m == 0 for j in iter_bits(m))]
            down_sets = [m for m in range(1 << k) if all(cols[j] & ~m == 0 for j in iter_bits(m))]
            for U in up_sets:
                for D in down_sets:
                    if any(rows[d] & U != U for d in iter_bits(D)):
                        continue
                    new = [r | (1 << k if D >> i & 1 else 0) for i, r in enumerate(rows)]
                    new.append(U | 1 << k)
                    nxt.append(tuple(new))
        layer = nxt
    return [BinaryRelation(u, rows) for rows in sorted(layer)]


def preorders_by_filter(n: int) -> list[BinaryRelation]:
    """Quasiorders on ``{1..n}`` found by testing every off-diagonal edge set."""
    u = default_universe(n)
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = []
    for bits in range(1 << len(off)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(off):
            if bits >> k & 1:
                rows[i] |= 1 << j
        R = BinaryRelation(u, tuple(rows))
        if is_transitive(R):
            found.append(R)
    return sorted(found, key=lambda R: R.rows)


def random_quasiorder(n: int, rng: np.random.Generator, density: float | None = None) -> BinaryRelation:
    """Reflexive-transitive closure of a random relation. Not uniform over quasiorders."""
    if density is None:
        density = rng.uniform(0.0, 0.35)
    adj = rng.random((n, n)) < density
    rows = [sum(1 << j for j in range(n) if adj[i, j]) for i in range(n)]
    return BinaryRelation(default_universe(n), close_rows(rows, "reflexive_transitive"))


def set_partitions(items: Sequence[str]):
    """Yield every partition of ``items`` as a list of blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
