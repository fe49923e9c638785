"""Finite bounded lattices given by an order matrix.

Elements are addressed by index ``0..n-1``; ``names`` is used only for I/O and
error witnesses. Join and meet tables are materialized at validation time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InputError, LatticeValidationError, UnsupportedStructureError


def reflexive_transitive_closure(leq: np.ndarray) -> np.ndarray:
    m = np.array(leq, dtype=bool) | np.eye(len(leq), dtype=bool)
    while True:
        nxt = m | ((m.astype(np.int32) @ m.astype(np.int32)) > 0)
        if (nxt == m).all():
            return m
        m = nxt


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def _bound_table(leq: np.ndarray, upper: bool):
    """Least upper (or greatest lower) bound table, -1 where none exists."""
    n = len(leq)
    rel = leq if upper else leq.T
    # bounds[a, b, z]: z is an upper bound of a and b (dually for lower)
    bounds = rel[:, None, :] & rel[None, :, :]
    # the least bound has the smallest down-set (up-set, dually)
    rank = rel.sum(axis=0)
    score = np.where(bounds, rank[None, None, :], n + 1)
    cand = score.argmin(axis=2)
    has = bounds.any(axis=2)
    # cand must lie below every other bound
    ok = ~(bounds & ~rel[cand]).any(axis=2)
    table = np.where(has & ok, cand, -1)
    return table


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    names: tuple[str, ...]
    leq: np.ndarray
    join_table: np.ndarray = field(repr=False)
    meet_table: np.ndarray = field(repr=False)
    bottom: int
    top: int

    def __len__(self):
        return len(self.names)

    @property
    def size(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    def index(self, x) -> int:
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if not 0 <= x < len(self.names):
                raise InputError(f"element index {x} out of range")
            return int(x)
        try:
            return self._index[str(x)]
        except KeyError:
            raise InputError(f"unknown lattice element {x!r}") from None

    def __getitem__(self, name) -> int:
        return self.index(name)

    @cached_property
    def rank(self) -> np.ndarray:
        """Number of elements below each element."""
        return self.leq.sum(axis=0)

    @cached_property
    def lt(self) -> np.ndarray:
        return self.leq & ~np.eye(self.size, dtype=bool)

    @cached_property
    def covers(self) -> np.ndarray:
        """``covers[x, y]`` iff ``y`` covers ``x``."""
        lt = self.lt.astype(np.int32)
        return self.lt & ~((lt @ lt) > 0)

    def hasse_edges(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(self.covers)]

    def join(self, a, b) -> int:
        return int(self.join_table[self.index(a), self.index(b)])

    def meet(self, a, b) -> int:
        return int(self.meet_table[self.index(a), self.index(b)])

    def big_join(self, items: Iterable) -> int:
        acc = self.bottom
        for x in items:
            acc = int(self.join_table[acc, self.index(x)])
        return acc

    def big_meet(self, items: Iterable) -> int:
        acc = self.top
        for x in items:
            acc = int(self.meet_table[acc, self.index(x)])
        return acc

    def down(self, x) -> np.ndarray:
        return np.flatnonzero(self.leq[:, self.index(x)])

    def up(self, x) -> np.ndarray:
        return np.flatnonzero(self.leq[self.index(x), :])


def validate_lattice(names: Sequence[str], leq) -> FiniteLattice:
    """Check the lattice axioms and build the join/meet tables.

    Raises :class:`LatticeValidationError` naming the first failing axiom with a
    witness pair or triple of element names.
    """
    names = tuple(str(n) for n in names)
    leq = np.array(leq, dtype=bool)
    n = len(names)
    if leq.shape != (n, n):
        raise LatticeValidationError(f"order matrix has shape {leq.shape}, expected {(n, n)}", "shape")
    if len(set(names)) != n:
        raise LatticeValidationError("duplicate element names", "names")
    if n == 0:
        raise LatticeValidationError("a lattice needs at least one element", "nonempty")

    w = _first(~np.diag(leq))
    if w is not None:
        x = names[w[0]]
        raise LatticeValidationError(f"not reflexive at {x}", "reflexivity", (x,))
    w = _first(leq & leq.T & ~np.eye(n, dtype=bool))
    if w is not None:
        pair = (names[w[0]], names[w[1]])
        raise LatticeValidationError(f"not antisymmetric: {pair}", "antisymmetry", pair)
    # x <= y <= z but not x <= z
    bad = leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :]
    w = _first(bad)
    if w is not None:
        triple = tuple(names[i] for i in w)
        raise LatticeValidationError(f"not transitive: {triple}", "transitivity", triple)

    join = _bound_table(leq, upper=True)
    w = _first(join < 0)
    if w is not None:
        pair = (names[w[0]], names[w[1]])
        raise LatticeValidationError(f"no least upper bound for {pair}", "join", pair)
    meet = _bound_table(leq, upper=False)
    w = _first(meet < 0)
    if w is not None:
        pair = (names[w[0]], names[w[1]])
        raise LatticeValidationError(f"no greatest lower bound for {pair}", "meet", pair)

    bottom = int(np.flatnonzero(leq.all(axis=1))[0])
    top = int(np.flatnonzero(leq.all(axis=0))[0])
    for arr in (leq, join, meet):
        arr.setflags(write=False)
    return FiniteLattice(names, leq, join, meet, bottom, top)


def lattice_from_hasse(names: Sequence[str], edges: Iterable[tuple[str, str]]) -> FiniteLattice:
    """Build a lattice from covering pairs ``(lower, upper)``."""
    names = tuple(str(n) for n in names)
    index = {n: i for i, n in enumerate(names)}
    m = np.zeros((len(names), len(names)), dtype=bool)
    for a, b in edges:
        try:
            m[index[str(a)], index[str(b)]] = True
        except KeyError as e:
            raise InputError(f"unknown element {e.args[0]!r} in Hasse edge") from None
    return validate_lattice(names, reflexive_transitive_closure(m))


def join(L: FiniteLattice, a, b) -> int:
    return L.join(a, b)


def meet(L: FiniteLattice, a, b) -> int:
    return L.meet(a, b)


def big_join(L: FiniteLattice, items: Iterable) -> int:
    return L.big_join(items)


def big_meet(L: FiniteLattice, items: Iterable) -> int:
    return L.big_meet(items)


# -- join-irreducibles --------------------------------------------------------

@dataclass(frozen=True)
class JoinIrreducibleSet:
    members: tuple[int, ...]
    below: tuple[tuple[int, ...], ...]  # below[x] = J(x)

    def __contains__(self, j):
        return j in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def join_irreducibles(L: FiniteLattice) -> JoinIrreducibleSet:
    """Nonzero ``j`` with ``j != join{y | y < j}``."""
    members = []
    for x in range(L.size):
        if x == L.bottom:
            continue
        if L.big_join(np.flatnonzero(L.lt[:, x])) != x:
            members.append(x)
    below = tuple(tuple(j for j in members if L.leq[j, x]) for x in range(L.size))
    return JoinIrreducibleSet(tuple(members), below)


def join_irreducibles_bruteforce(L: FiniteLattice) -> tuple[int, ...]:
    """Definitional oracle: ``x`` is irreducible iff no ``S`` with ``x not in S`` has ``join S = x``.

    Any such ``S`` lies inside ``{y | y < x}``, so it suffices to enumerate the
    joins of all subsets of that set; this is done exactly by growing the set
    of reachable joins one generator at a time.
    """
    out = []
    for x in range(L.size):
        reach = np.zeros(L.size, dtype=bool)
        reach[L.bottom] = True  # join of the empty subset
        for y in np.flatnonzero(L.lt[:, x]):
            reach[L.join_table[reach, y]] = True
        if not reach[x]:
            out.append(x)
    return tuple(out)


# -- distributivity and Heyting structure ------------------------------------

def distributivity_witness(L: FiniteLattice):
    """First triple (x, y, z) in canonical order with x^(y v z) != (x^y) v (x^z), else None."""
    J, M = L.join_table, L.meet_table
    n = L.size
    idx = np.arange(n)
    lhs = M[idx[:, None, None], J[None, :, :]]
    rhs = J[M[:, :, None], M[:, None, :]]
    return _first(lhs != rhs)


def is_distributive(L: FiniteLattice) -> bool:
    return distributivity_witness(L) is None


def _require_distributive(L: FiniteLattice):
    w = distributivity_witness(L)
    if w is not None:
        names = tuple(L.names[i] for i in w)
        raise UnsupportedStructureError(f"lattice is not distributive; witness {names}")


def relative_pseudocomplement(L: FiniteLattice, a, b) -> int:
    """``a => b``: the greatest ``x`` with ``a ^ x <= b``."""
    _require_distributive(L)
    a, b = L.index(a), L.index(b)
    cands = np.flatnonzero(L.leq[L.meet_table[:, a], b])
    r = L.big_join(cands)
    if not L.leq[L.meet_table[a, r], b] or not L.leq[cands, r].all():
        raise UnsupportedStructureError(f"no relative pseudocomplement for {L.names[a]} => {L.names[b]}")
    return r


def heyting_table(L: FiniteLattice) -> np.ndarray:
    """Full ``=>`` table, ``H[a, b] = a => b``, verified against the defining property."""
    _require_distributive(L)
    n = L.size
    M = L.meet_table
    # cand[a, b, z]: z ^ a <= b
    cand = L.leq[M[:, None, :], np.arange(n)[None, :, None]]
    score = np.where(cand, L.rank[None, None, :], -1)
    H = score.argmax(axis=2)
    # H[a, b] must lie above every candidate
    above = L.leq.T[H]  # above[a, b, z] = z <= H[a, b]
    if (cand & ~above).any():
        raise UnsupportedStructureError("relative pseudocomplement table does not exist")
    H.setflags(write=False)
    return H


# -- Birkhoff extension --------------------------------------------------------

def _check_order_iso(L: FiniteLattice, K: FiniteLattice, JL, JK, phi: Mapping[int, int]):
    JL, JK = list(JL), list(JK)
    if sorted(phi) != sorted(JL):
        raise InputError("phi must be defined exactly on the join-irreducibles of the source")
    image = [phi[j] for j in JL]
    if len(set(image)) != len(image) or sorted(image) != sorted(JK):
        raise InputError("phi is not a bijection onto the join-irreducibles of the target")
    for i in JL:
        for j in JL:
            if bool(L.leq[i, j]) != bool(K.leq[phi[i], phi[j]]):
                raise InputError(
                    f"phi is not an order-isomorphism: witness ({L.names[i]}, {L.names[j]})"
                )


def birkhoff_extend(L: FiniteLattice, K: FiniteLattice, phi: Mapping[int, int]) -> np.ndarray:
    """Extend an order-isomorphism of join-irreducibles to ``Phi(x) = join phi(J(x))``.

    The result is verified to be a lattice isomorphism on all pairs.
    """
    JL, JK = join_irreducibles(L), join_irreducibles(K)
    phi = {L.index(j): K.index(v) for j, v in phi.items()}
    _check_order_iso(L, K, JL, JK, phi)
    Phi = np.array([K.big_join(phi[j] for j in JL.below[x]) for x in range(L.size)], dtype=np.int64)
    if len(set(Phi.tolist())) != K.size or L.size != K.size:
        raise InputError("extension is not bijective")
    if Phi[L.bottom] != K.bottom or Phi[L.top] != K.top:
        raise InputError("extension does not preserve the bounds")
    if (Phi[L.join_table] != K.join_table[Phi[:, None], Phi[None, :]]).any():
        raise InputError("extension does not preserve joins")
    if (Phi[L.meet_table] != K.meet_table[Phi[:, None], Phi[None, :]]).any():
        raise InputError("extension does not preserve meets")
    Phi.setflags(write=False)
    return Phi


# -- small constructors -------------------------------------------------------

def chain_lattice(n: int, names: Sequence[str] | None = None) -> FiniteLattice:
    names = names or [str(i) for i in range(n)]
    idx = np.arange(n)
    return validate_lattice(names, idx[:, None] <= idx[None, :])


def powerset_lattice(atoms: Sequence[str]) -> FiniteLattice:
    """Subsets of ``atoms`` ordered by inclusion, named like ``{a,b}``."""
    k = len(atoms)
    masks = sorted(range(1 << k), key=lambda m: (bin(m).count("1"), m))
    names = ["{" + ",".join(atoms[i] for i in range(k) if m >> i & 1) + "}" for m in masks]
    arr = np.array(masks)
    return validate_lattice(names, (arr[:, None] & ~arr[None, :]) == 0)


def product_lattice(L: FiniteLattice, K: FiniteLattice) -> FiniteLattice:
    names = [f"({a},{b})" for a in L.names for b in K.names]
    leq = np.kron(L.leq.astype(np.int8), K.leq.astype(np.int8)).astype(bool)
    return validate_lattice(names, leq)
