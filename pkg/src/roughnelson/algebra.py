"""De Morgan, Kleene, Nelson and three-valued Lukasiewicz structure on finite lattices.

Every checker is exhaustive and table-driven. Failures carry the first witness
in canonical element order (lexicographic on element indices), so reports are
reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .errors import ConsistencyError, InputError, UnsupportedStructureError
from .lattice import (
    FiniteLattice,
    distributivity_witness,
    heyting_table,
    join_irreducibles,
    validate_lattice,
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check. ``passed`` is None when the check was skipped."""

    name: str
    passed: bool | None
    witness: tuple | None = None
    detail: str = ""
    parts: tuple[Verdict, ...] = ()
    data: dict | None = field(default=None, compare=False)

    def __bool__(self):
        return bool(self.passed)

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.detail:
            out["detail"] = self.detail
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out


def _combine(name: str, parts: Sequence[Verdict]) -> Verdict:
    failed = next((p for p in parts if p.passed is False), None)
    if failed is not None:
        return Verdict(name, False, failed.witness, f"{failed.name} fails", tuple(parts))
    return Verdict(name, True, parts=tuple(parts))


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


@dataclass(frozen=True, eq=False)
class DeMorganAlgebra:
    """A finite lattice with a candidate negation table. Nothing is assumed verified."""

    lattice: FiniteLattice
    neg: np.ndarray

    def __post_init__(self):
        neg = np.asarray(self.neg, dtype=np.int64)
        n = self.lattice.size
        if neg.shape != (n,) or ((neg < 0) | (neg >= n)).any():
            raise InputError("negation must be a total map on the lattice elements")
        neg.setflags(write=False)
        object.__setattr__(self, "neg", neg)

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def names(self) -> tuple[str, ...]:
        return self.lattice.names

    def c(self, x) -> int:
        return int(self.neg[self.lattice.index(x)])

    def name(self, x: int) -> str:
        return self.lattice.names[x]

    @cached_property
    def join_irreducibles(self) -> tuple[int, ...]:
        return join_irreducibles(self.lattice).members

    @cached_property
    def heyting(self) -> np.ndarray:
        return heyting_table(self.lattice)

    @cached_property
    def weak_impl_table(self) -> np.ndarray:
        """``a -> b = a => (c(a) v b)``."""
        L, c = self.lattice, self.neg
        t = self.heyting[np.arange(self.size)[:, None], L.join_table[c[:, None], np.arange(self.size)[None, :]]]
        t.setflags(write=False)
        return t

    @cached_property
    def star_map(self) -> dict[int, int]:
        return {j: _star(self, j) for j in self.join_irreducibles}


def negation_from_mapping(L: FiniteLattice, mapping: Mapping[str, str], complete: bool = True) -> np.ndarray:
    """Negation table from a partial name map.

    When ``complete`` is set, a map given on half the elements is completed by
    involution (``c(x) = y`` implies ``c(y) = x``).
    """
    neg = [-1] * L.size
    for k, v in mapping.items():
        a, b = L.index(k), L.index(v)
        neg[a] = b
        if complete and neg[b] == -1:
            neg[b] = a
    missing = [L.names[i] for i, v in enumerate(neg) if v < 0]
    if missing:
        raise InputError(f"negation undefined on {missing}")
    return np.array(neg, dtype=np.int64)


def make_algebra(L: FiniteLattice, negation) -> DeMorganAlgebra:
    if isinstance(negation, Mapping):
        negation = negation_from_mapping(L, negation)
    return DeMorganAlgebra(L, np.asarray(negation))


# -- De Morgan and Kleene ------------------------------------------------------

def verify_demorgan(lattice: FiniteLattice | DeMorganAlgebra, c=None) -> Verdict:
    """Involution ``c(c(x)) = x`` and order reversal ``x <= y iff c(x) >= c(y)``."""
    alg = lattice if isinstance(lattice, DeMorganAlgebra) else make_algebra(lattice, c)
    L, neg, nm = alg.lattice, alg.neg, alg.names
    w = _first(neg[neg] != np.arange(alg.size))
    inv = Verdict("involution", w is None, None if w is None else (nm[w[0]],))
    # leq[x, y] must equal leq[c(y), c(x)]
    w = _first(L.leq != L.leq[neg[None, :], neg[:, None]])
    anti = Verdict("antitone", w is None, None if w is None else (nm[w[0]], nm[w[1]]))
    return _combine("de_morgan", [inv, anti])


def verify_kleene(alg: DeMorganAlgebra) -> Verdict:
    """``x ^ c(x) <= y v c(y)`` for all pairs."""
    L, neg, idx = alg.lattice, alg.neg, np.arange(alg.size)
    low = L.meet_table[idx, neg]
    high = L.join_table[idx, neg]
    w = _first(~L.leq[low[:, None], high[None, :]])
    return Verdict("kleene", w is None, None if w is None else (alg.name(w[0]), alg.name(w[1])))


@dataclass(frozen=True)
class KleeneStructure:
    base: DeMorganAlgebra
    negative_cone: frozenset[int]
    positive_cone: frozenset[int]
    alpha: int
    beta: int


def cones(alg: DeMorganAlgebra) -> KleeneStructure:
    """``A- = {x ^ c(x)}``, ``A+ = {x v c(x)}`` and their generators ``alpha``, ``beta``.

    The closed forms ``A- = (alpha]``, ``A+ = [beta)`` and ``c(alpha) = beta`` are
    checked; a failure means the input is not a Kleene algebra.
    """
    L, neg, idx = alg.lattice, alg.neg, np.arange(alg.size)
    minus = frozenset(L.meet_table[idx, neg].tolist())
    plus = frozenset(L.join_table[idx, neg].tolist())
    alpha, beta = L.big_join(sorted(minus)), L.big_meet(sorted(plus))
    if set(L.down(alpha).tolist()) != minus:
        raise ConsistencyError("negative cone is not the principal ideal of its join")
    if set(L.up(beta).tolist()) != plus:
        raise ConsistencyError("positive cone is not the principal filter of its meet")
    if neg[alpha] != beta:
        raise ConsistencyError("c(alpha) != beta")
    return KleeneStructure(alg, minus, plus, alpha, beta)


def kleene_cone_verdicts(alg: DeMorganAlgebra) -> list[Verdict]:
    """Exhaustive checks of the elementary cone facts of a Kleene algebra."""
    L, neg, idx = alg.lattice, alg.neg, np.arange(alg.size)
    minus = np.zeros(alg.size, dtype=bool)
    minus[L.meet_table[idx, neg]] = True
    plus = np.zeros(alg.size, dtype=bool)
    plus[L.join_table[idx, neg]] = True
    out = []
    image = np.zeros(alg.size, dtype=bool)
    image[neg[plus]] = True
    out.append(Verdict("c(A+) = A-", bool((image == minus).all())))
    a = np.flatnonzero(minus)
    w = _first(~L.leq[a[:, None], neg[a][None, :]])
    out.append(Verdict("a <= c(b) on A-", w is None, None if w is None else (alg.name(a[w[0]]), alg.name(a[w[1]]))))
    w = _first(minus != L.leq[idx, neg])
    out.append(Verdict("a in A- iff a <= c(a)", w is None, None if w is None else (alg.name(w[0]),)))
    w = _first(plus != L.leq[neg, idx])
    out.append(Verdict("a in A+ iff c(a) <= a", w is None, None if w is None else (alg.name(w[0]),)))
    return out


# -- the star map and the partition of J ----------------------------------------

def _star(alg: DeMorganAlgebra, j: int) -> int:
    L = alg.lattice
    not_below = np.flatnonzero(~L.leq[:, alg.neg[j]])
    return L.big_meet(not_below)


def star(alg: DeMorganAlgebra, j) -> int:
    """``j* = meet{x | x not <= c(j)}`` for a join-irreducible ``j``."""
    j = alg.lattice.index(j)
    if j not in alg.join_irreducibles:
        raise InputError(f"{alg.name(j)} is not join-irreducible")
    return alg.star_map[j]


@dataclass(frozen=True)
class JPartition:
    j_minus: tuple[int, ...]
    j_star: tuple[int, ...]
    j_plus: tuple[int, ...]
    star: dict[int, int]

    def klass(self, j: int) -> str:
        if j in self.j_minus:
            return "J-"
        if j in self.j_star:
            return "J*"
        if j in self.j_plus:
            return "J+"
        raise InputError(f"{j} is not join-irreducible")


def star_law_verdicts(alg: DeMorganAlgebra) -> list[Verdict]:
    """The star-map laws and the closed form ``c(x) = join{j | j* not <= x}``."""
    L, neg = alg.lattice, alg.neg
    J = alg.join_irreducibles
    st = alg.star_map
    nm = alg.name
    out = []

    w = next((j for j in J if L.leq[st[j], neg[j]]), None)
    out.append(Verdict("j* not <= c(j)", w is None, None if w is None else (nm(w),)))
    w = next(((i, j) for i in J for j in J if L.leq[i, j] and not L.leq[st[j], st[i]]), None)
    out.append(Verdict("star antitone on J", w is None, None if w is None else (nm(w[0]), nm(w[1]))))
    w = next((j for j in J if st.get(st[j]) != j), None)
    out.append(Verdict("j** = j", w is None, None if w is None else (nm(w),)))
    w = next((j for j in J if not (L.leq[j, st[j]] or L.leq[st[j], j])), None)
    out.append(Verdict("j, j* comparable", w is None, None if w is None else (nm(w),)))

    idx = np.arange(alg.size)
    minus_cone = set(L.meet_table[idx, neg].tolist())
    j_minus = {j for j in J if L.lt[j, st[j]]}
    j_plus = {j for j in J if L.lt[st[j], j]}
    sym = j_minus ^ (set(J) & minus_cone)
    w = min(sym) if sym else None
    out.append(Verdict("J- = J n A-", w is None, None if w is None else (nm(w),)))
    w = next((j for j in J if (j in j_minus) != (st[j] in j_plus)), None)
    out.append(Verdict("j in J- iff j* in J+", w is None, None if w is None else (nm(w),)))

    closed = [L.big_join(j for j in J if not L.leq[st[j], x]) for x in range(alg.size)]
    w = next((x for x in range(alg.size) if closed[x] != neg[x]), None)
    out.append(Verdict("c(x) = join{j | j* not <= x}", w is None, None if w is None else (nm(w),)))
    return out


def partition_J(alg: DeMorganAlgebra) -> JPartition:
    """Split ``J`` by comparing each ``j`` with ``j*``; all star laws are asserted."""
    laws = star_law_verdicts(alg)
    bad = next((v for v in laws if not v.passed), None)
    if bad is not None:
        raise ConsistencyError(f"star law '{bad.name}' fails at {bad.witness}; is the input a Kleene algebra?")
    L, st = alg.lattice, alg.star_map
    J = alg.join_irreducibles
    return JPartition(
        tuple(j for j in J if L.lt[j, st[j]]),
        tuple(j for j in J if st[j] == j),
        tuple(j for j in J if L.lt[st[j], j]),
        dict(st),
    )


# -- condition (M) and the interpolation property -------------------------------

def condition_M(alg: DeMorganAlgebra) -> Verdict:
    """For ``p, q in J`` with ``p*, q* <= p, q`` find ``k in J`` with ``p*, q* <= k <= p, q``.

    On success ``data["interpolants"]`` maps each such ``(p, q)`` to the first
    ``k`` found.
    """
    L, st = alg.lattice, alg.star_map
    J = alg.join_irreducibles
    leq = L.leq
    found = {}
    for p in J:
        for q in J:
            lo = (st[p], st[q])
            hi = (p, q)
            if not all(leq[a, b] for a in lo for b in hi):
                continue
            k = next((k for k in J if leq[lo[0], k] and leq[lo[1], k] and leq[k, p] and leq[k, q]), None)
            if k is None:
                return Verdict("condition_M", False, (alg.name(p), alg.name(q)))
            found[(p, q)] = k
    return Verdict("condition_M", True, data={"interpolants": found})


def _prime_filter_g(alg: DeMorganAlgebra, P: np.ndarray) -> np.ndarray:
    """``g(P) = c(P)'`` for a filter given as a boolean mask."""
    image = np.zeros(alg.size, dtype=bool)
    image[alg.neg[P]] = True
    return ~image


def interpolation_prime_filters(alg: DeMorganAlgebra) -> Verdict:
    """Interpolation property via prime filters of a finite distributive Kleene algebra.

    Prime filters are the principal filters ``[j)``, ``j`` join-irreducible.
    ``g`` is computed from its definition and checked against ``g([j)) = [j*)``.
    Then for every ``P, Q`` with ``P <= g(P)``, ``Q <= g(Q)``, ``P <= g(Q)`` the
    criterion ``a ^ b not <= c(a) v c(b)`` is tested for all ``a in P``, ``b in Q``.
    """
    L, neg = alg.lattice, alg.neg
    w = distributivity_witness(L)
    if w is not None:
        raise UnsupportedStructureError("prime-filter interpolation needs a distributive lattice")
    J = alg.join_irreducibles
    filters = {j: L.leq[j, :].copy() for j in J}
    g = {}
    for j, P in filters.items():
        gP = _prime_filter_g(alg, P)
        if not (gP == L.leq[alg.star_map[j], :]).all():
            raise ConsistencyError(f"g([{alg.name(j)})) is not [{alg.name(j)}*)")
        g[j] = gP
    plus = [j for j in J if not (filters[j] & ~g[j]).any()]
    idx = np.arange(alg.size)
    bad = L.leq[L.meet_table, L.join_table[neg[:, None], neg[None, :]]]
    for p in plus:
        for q in plus:
            if (filters[p] & ~g[q]).any():
                continue
            a_idx, b_idx = idx[filters[p]], idx[filters[q]]
            hit = _first(bad[np.ix_(a_idx, b_idx)])
            if hit is not None:
                a, b = a_idx[hit[0]], b_idx[hit[1]]
                return Verdict("interpolation", False, tuple(alg.name(x) for x in (p, q, a, b)))
    return Verdict("interpolation", True)


# -- weak implication and the Nelson equations ----------------------------------

def _require_nelson_ready(alg: DeMorganAlgebra):
    w = distributivity_witness(alg.lattice)
    if w is not None:
        raise UnsupportedStructureError("lattice is not distributive; weak implication undefined")


def weak_impl(alg: DeMorganAlgebra, a, b) -> int:
    _require_nelson_ready(alg)
    L = alg.lattice
    return int(alg.weak_impl_table[L.index(a), L.index(b)])


def verify_nelson(alg: DeMorganAlgebra) -> Verdict:
    """Equations N1-N5 for the weak implication; N4 and N5 range over triples."""
    _require_nelson_ready(alg)
    L, neg, T = alg.lattice, alg.neg, alg.weak_impl_table
    M, Jt = L.meet_table, L.join_table
    n, nm = alg.size, alg.name
    idx = np.arange(n)
    a2, b2 = idx[:, None], idx[None, :]
    cab = Jt[neg[:, None], b2]  # c(a) v b

    def pair(name, mask):
        w = _first(mask)
        return Verdict(name, w is None, None if w is None else tuple(nm(i) for i in w))

    parts = [
        pair("N1", T[idx, idx] != L.top),
        pair("N2", M[cab, T] != cab),
        pair("N3", M[a2, T] != M[a2, cab]),
    ]
    # triples, chunked over the first variable
    n4 = n5 = None
    for a in range(n):
        if n4 is None:
            lhs = T[a][M]  # a -> (b ^ c)
            rhs = M[T[a][:, None], T[a][None, :]]
            w = _first(lhs != rhs)
            if w is not None:
                n4 = (a,) + w
        if n5 is None:
            lhs = T[M[a][:, None], idx[None, :]]  # (a ^ b) -> c
            rhs = T[a][T]  # a -> (b -> c)
            w = _first(lhs != rhs)
            if w is not None:
                n5 = (a,) + w
        if n4 is not None and n5 is not None:
            break
    parts.append(Verdict("N4", n4 is None, None if n4 is None else tuple(nm(i) for i in n4)))
    parts.append(Verdict("N5", n5 is None, None if n5 is None else tuple(nm(i) for i in n5)))
    return _combine("nelson", parts)


# -- three-valued Lukasiewicz structure -----------------------------------------

def verify_lukasiewicz(alg: DeMorganAlgebra, delta) -> Verdict:
    L, neg = alg.lattice, alg.neg
    d = np.asarray(delta, dtype=np.int64)
    n, nm = alg.size, alg.name
    idx = np.arange(n)
    M, Jt = L.meet_table, L.join_table
    if d.shape != (n,) or ((d < 0) | (d >= n)).any():
        return Verdict("lukasiewicz", False, detail="delta is not a total map")

    def one(name, mask):
        w = _first(mask)
        return Verdict(name, w is None, None if w is None else tuple(nm(i) for i in w))

    dw = distributivity_witness(L)
    parts = [
        Verdict("distributive", dw is None, None if dw is None else tuple(nm(i) for i in dw)),
        one("L1", neg[neg] != idx),
        one("L2", neg[M] != Jt[neg[:, None], neg[None, :]]),
        one("L3", Jt[neg, d] != L.top),
        one("L4", M[idx, neg] != M[neg, d]),
        one("L5", d[M] != M[d[:, None], d[None, :]]),
    ]
    return _combine("lukasiewicz", parts)


@dataclass(frozen=True)
class DeltaSearch:
    solutions: tuple[tuple[int, ...], ...]
    exhausted: bool  # True when the whole search space was covered
    nodes: int

    @property
    def delta(self) -> tuple[int, ...] | None:
        return self.solutions[0] if self.solutions else None


def find_delta(alg: DeMorganAlgebra, cap: int = 8) -> DeltaSearch:
    """Search for ``Delta`` satisfying L1-L5.

    ``Delta`` preserves binary meets and ``Delta(1) = 1``, so it is fixed by its
    values on meet-irreducible elements; the search backtracks over those,
    drawing each value from ``{d | c(x) v d = 1, x ^ c(x) = c(x) ^ d}``. The
    closed form ``Delta(x) = c(x) => x`` is tried first. With ``exhausted`` set
    and no solutions, no ``Delta`` exists.
    """
    L, neg = alg.lattice, alg.neg
    n = alg.size
    if verify_demorgan(alg).passed is not True:
        return DeltaSearch((), True, 0)
    if distributivity_witness(L) is not None:
        return DeltaSearch((), True, 0)
    idx = np.arange(n)
    M, Jt = L.meet_table, L.join_table
    ok = (Jt[neg[:, None], idx[None, :]] == L.top) & (M[idx, neg][:, None] == M[neg[:, None], idx[None, :]])
    cands = [np.flatnonzero(ok[x]).tolist() for x in range(n)]

    solutions: list[tuple[int, ...]] = []
    closed = tuple(int(v) for v in alg.heyting[neg, idx])
    if verify_lukasiewicz(alg, closed).passed:
        solutions.append(closed)

    upper_covers = L.covers.sum(axis=1)
    mi = [x for x in range(n) if upper_covers[x] == 1]
    above = [[m for m in mi if L.leq[x, m]] for x in range(n)]
    assign: dict[int, int] = {}
    nodes = 0
    capped = False

    def derive():
        return tuple(L.big_meet(assign[m] for m in above[x]) for x in range(n))

    def rec(k):
        nonlocal nodes, capped
        if len(solutions) >= cap:
            capped = True
            return
        nodes += 1
        if k == len(mi):
            d = derive()
            if d not in solutions and verify_lukasiewicz(alg, d).passed:
                solutions.append(d)
            return
        m = mi[k]
        for v in cands[m]:
            consistent = all(
                int(M[v, assign[o]]) in cands_set[int(M[m, o])] for o in mi[:k]
            )
            if consistent:
                assign[m] = v
                rec(k + 1)
                del assign[m]

    cands_set = [set(c) for c in cands]
    rec(0)
    return DeltaSearch(tuple(solutions), not capped, nodes)


# -- aggregate views -------------------------------------------------------------

@dataclass(frozen=True)
class NelsonAlgebraInstance:
    kleene: KleeneStructure
    weak_impl: np.ndarray
    flags: dict[str, bool]


def nelson_instance(alg: DeMorganAlgebra) -> NelsonAlgebraInstance:
    report = verify_all(alg)
    flags = {k: bool(v.passed) for k, v in report.items()}
    if not (flags["de_morgan"] and flags["distributive"] and flags["kleene"]):
        raise UnsupportedStructureError("not a distributive Kleene algebra")
    return NelsonAlgebraInstance(cones(alg), alg.weak_impl_table, flags)


def _skipped(name, reason):
    return Verdict(name, None, detail=f"skipped: {reason}")


def verify_all(alg: DeMorganAlgebra, delta_cap: int = 8) -> dict[str, Verdict]:
    """Every axiom family in dependency order; later checks are skipped when a prerequisite fails."""
    L = alg.lattice
    out: dict[str, Verdict] = {}
    w = distributivity_witness(L)
    out["distributive"] = Verdict("distributive", w is None, None if w is None else tuple(L.names[i] for i in w))
    out["de_morgan"] = verify_demorgan(alg)
    base = out["distributive"].passed and out["de_morgan"].passed
    out["kleene"] = verify_kleene(alg) if out["de_morgan"].passed else _skipped("kleene", "de_morgan")
    ready = base and out["kleene"].passed
    if ready:
        out["star_laws"] = _combine("star_laws", star_law_verdicts(alg) + kleene_cone_verdicts(alg))
        out["condition_M"] = condition_M(alg)
        out["interpolation"] = interpolation_prime_filters(alg)
        out["nelson"] = verify_nelson(alg)
        search = find_delta(alg, cap=delta_cap)
        if search.delta is not None:
            v = verify_lukasiewicz(alg, search.delta)
            out["lukasiewicz"] = Verdict(
                "lukasiewicz", True, parts=v.parts,
                detail=f"{len(search.solutions)} delta(s) found",
                data={"delta": search.delta},
            )
        else:
            out["lukasiewicz"] = Verdict("lukasiewicz", False, detail=f"no delta exists ({search.nodes} nodes searched)")
    else:
        reason = "distributive Kleene algebra required"
        for k in ("star_laws", "condition_M", "interpolation", "nelson", "lukasiewicz"):
            out[k] = _skipped(k, reason)
    return out


def is_boolean_lattice(L: FiniteLattice) -> bool:
    """Distributive and complemented."""
    if distributivity_witness(L) is not None:
        return False
    M, Jt = L.meet_table, L.join_table
    comp = (M == L.bottom) & (Jt == L.top)
    return bool(comp.any(axis=1).all())


def as_abstract(alg: DeMorganAlgebra, rng: np.random.Generator | None = None, prefix: str = "e"):
    """Copy of ``alg`` with opaque names ``e0, e1, ...`` and optionally shuffled indices.

    Returns ``(abstract_algebra, perm)`` where ``perm[i]`` is the new index of
    old element ``i``.
    """
    n = alg.size
    perm = np.arange(n) if rng is None else rng.permutation(n)
    inv = np.argsort(perm)
    leq = alg.lattice.leq[inv[:, None], inv[None, :]]
    neg = perm[alg.neg[inv]]
    L = validate_lattice([f"{prefix}{i}" for i in range(n)], leq)
    return DeMorganAlgebra(L, neg), perm


def is_algebra_isomorphism(A: DeMorganAlgebra, B: DeMorganAlgebra, f) -> bool:
    """Table check that ``f`` is a bijection preserving v, ^, c, bounds and ->."""
    f = np.asarray(f)
    if A.size != B.size or len(set(f.tolist())) != A.size:
        return False
    LA, LB = A.lattice, B.lattice
    if f[LA.bottom] != LB.bottom or f[LA.top] != LB.top:
        return False
    if (f[LA.join_table] != LB.join_table[f[:, None], f[None, :]]).any():
        return False
    if (f[LA.meet_table] != LB.meet_table[f[:, None], f[None, :]]).any():
        return False
    if (f[A.neg] != B.neg[f]).any():
        return False
    if distributivity_witness(LA) is None:
        if (f[A.weak_impl_table] != B.weak_impl_table[f[:, None], f[None, :]]).any():
            return False
    return True
