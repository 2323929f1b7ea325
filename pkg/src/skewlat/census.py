"""Census of small skew lattices, one representative per isomorphism class.

The main enumeration (:func:`enumerate_skew_lattices`) searches meet
tables first: a depth-first fill of the off-diagonal cells with
idempotent diagonal and incremental associativity checking, so that a
cell assignment is rejected the moment it completes a bad triple.
Completed meet tables are kept only if they satisfy the regularity
identity and their class structure has a top class — both necessary for
extending to a skew lattice.  The join table is then searched the same
way, but the absorption laws do most of the work up front: two of them
pin ``x∨(x∧y)`` and ``(x∧y)∨y`` outright, and the other two confine
each remaining cell ``x∨y`` to the candidates ``v`` with ``x∧v = x``
and ``v∧y = y``.  Isomorphic results are merged through
:func:`canonicalize`, the lexicographically least relabeling of the
table pair.

Counts produced this way have no external reference to compare against,
so a second, deliberately different strategy exists for small orders:
:func:`enumerate_by_quotient_construction` builds candidate tables from
a labeled quotient lattice and a block partition of the carrier and
then filters by the axioms.  Agreement of the two canonical-form sets
is part of the acceptance suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .core import (
    CapExceededError,
    FiniteSkewLattice,
    PreconditionError,
    Table,
    check_identity,
    check_lemma_reg,
    check_symmetric,
    detect_zero,
    is_commutative,
    lattice_from_order,
)
from .completeness import (
    check_bounded_above,
    check_implication_chain,
    check_join_complete,
    check_prop_joins,
    check_section_exists,
    check_section_extension,
)
from .frames import check_theorem_ncframes, is_ncframe
from .models import _effective_cap

__all__ = [
    "CensusFilter",
    "CanonicalForm",
    "canonicalize",
    "enumerate_skew_lattices",
    "enumerate_by_quotient_construction",
    "search_counterexample",
    "PREDICATES",
]

DEFAULT_CAP_UNFILTERED = 4
DEFAULT_CAP_FILTERED = 5
CROSS_CHECK_CAP = 3


@dataclass(frozen=True)
class CensusFilter:
    """Tri-state property filters: True requires, False forbids, None ignores."""

    has_zero: bool | None = None
    strongly_distributive: bool | None = None
    left_handed: bool | None = None
    normal: bool | None = None
    symmetric: bool | None = None
    commutative: bool | None = None

    @property
    def active(self) -> bool:
        return any(
            v is not None
            for v in (
                self.has_zero,
                self.strongly_distributive,
                self.left_handed,
                self.normal,
                self.symmetric,
                self.commutative,
            )
        )

    def matches(self, S: FiniteSkewLattice) -> bool:
        probes: tuple[tuple[bool | None, Callable[[], bool]], ...] = (
            (self.has_zero, lambda: detect_zero(S) is not None),
            (self.strongly_distributive, lambda: check_identity(S, "strongly_distributive").ok),
            (self.left_handed, lambda: check_identity(S, "left_handed").ok),
            (self.normal, lambda: check_identity(S, "normal").ok),
            (self.symmetric, lambda: check_symmetric(S).ok),
            (self.commutative, lambda: is_commutative(S)),
        )
        return all(probe() == want for want, probe in probes if want is not None)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Lexicographically least relabeling of the table pair.

    Two structures are isomorphic exactly when their canonical forms are
    equal; the zero element plays no role because it is determined by
    the tables.
    """

    meet_table: Table
    join_table: Table

    @property
    def order(self) -> int:
        return len(self.meet_table)


def _relabel(table: Table, perm: tuple[int, ...]) -> Table:
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        row = table[i]
        pi = perm[i]
        for j in range(n):
            out[pi][perm[j]] = perm[row[j]]
    return tuple(tuple(r) for r in out)


def canonicalize(S: FiniteSkewLattice) -> CanonicalForm:
    """Minimise the (meet, join) table pair over all carrier relabelings."""
    best: tuple[Table, Table] | None = None
    for perm in itertools.permutations(range(S.order)):
        cand = (_relabel(S.meet_table, perm), _relabel(S.join_table, perm))
        if best is None or cand < best:
            best = cand
    assert best is not None
    return CanonicalForm(meet_table=best[0], join_table=best[1])


def _realize(cf: CanonicalForm) -> FiniteSkewLattice:
    bare = FiniteSkewLattice(cf.order, cf.meet_table, cf.join_table)
    z = detect_zero(bare)
    if z is None:
        return bare
    return FiniteSkewLattice(cf.order, cf.meet_table, cf.join_table, zero=z)


# --- incremental table search -------------------------------------------

def _triple_ok(T: list[list[int]], a: int, b: int, c: int) -> bool:
    # associativity of one triple, tolerant of unassigned (-1) entries
    ab = T[a][b]
    if ab < 0:
        return True
    left = T[ab][c]
    if left < 0:
        return True
    bc = T[b][c]
    if bc < 0:
        return True
    right = T[a][bc]
    return right < 0 or left == right


def _assoc_ok_after(T: list[list[int]], p: int, q: int, n: int) -> bool:
    # only triples whose evaluation touches cell (p, q) can turn bad
    for c in range(n):
        if not _triple_ok(T, p, q, c):
            return False
        if not _triple_ok(T, c, p, q):
            return False
    for a in range(n):
        row = T[a]
        for b in range(n):
            v = row[b]
            if v == p and not _triple_ok(T, a, b, q):
                return False
            if v == q and not _triple_ok(T, p, a, b):
                return False
    return True


Hook = Callable[[list[list[int]], int, int], bool]


def _left_handed_hook(T: list[list[int]], p: int, q: int) -> bool:
    # partial check of x∧y∧x = x∧y
    n = len(T)
    for x in range(n):
        row = T[x]
        for y in range(n):
            v = row[y]
            if v < 0:
                continue
            w = T[v][x]
            if 0 <= w != v:
                return False
    return True


def _normal_hook(T: list[list[int]], p: int, q: int) -> bool:
    # partial check of x∧y∧z∧x = x∧z∧y∧x
    n = len(T)
    for x in range(n):
        row = T[x]
        for y in range(n):
            xy = row[y]
            if xy < 0:
                continue
            for z in range(n):
                xyz = T[xy][z]
                if xyz < 0:
                    continue
                left = T[xyz][x]
                if left < 0:
                    continue
                xz = row[z]
                if xz < 0:
                    continue
                xzy = T[xz][y]
                if xzy < 0:
                    continue
                right = T[xzy][x]
                if 0 <= right != left:
                    return False
    return True


def _table_search(
    n: int,
    preset: list[tuple[int, int, int]],
    cand: Callable[[int, int], tuple[int, ...]],
    hooks: tuple[Hook, ...],
) -> Iterator[Table]:
    """DFS over off-diagonal cells of an idempotent table.

    ``preset`` assignments (pins) are applied first with the same
    incremental checks; conflicting pins abort the search.  Free cells
    range over ``cand(i, j)`` in row-major cell order.
    """
    T = [[-1] * n for _ in range(n)]
    for i in range(n):
        T[i][i] = i
    for i, j, v in preset:
        if T[i][j] >= 0:
            if T[i][j] != v:
                return
            continue
        T[i][j] = v
        if not _assoc_ok_after(T, i, j, n) or not all(h(T, i, j) for h in hooks):
            return
    free = [(i, j) for i in range(n) for j in range(n) if T[i][j] < 0]

    def rec(k: int) -> Iterator[Table]:
        if k == len(free):
            yield tuple(tuple(row) for row in T)
            return
        i, j = free[k]
        for v in cand(i, j):
            T[i][j] = v
            if _assoc_ok_after(T, i, j, n) and all(h(T, i, j) for h in hooks):
                yield from rec(k + 1)
        T[i][j] = -1

    yield from rec(0)


def _band_regular(M: Table) -> bool:
    n = len(M)
    for a in range(n):
        row = M[a]
        for x in range(n):
            ax = row[x]
            axa = M[ax][a]
            for y in range(n):
                if M[M[axa][y]][a] != M[M[ax][y]][a]:
                    return False
    return True


def _band_has_top_class(M: Table) -> bool:
    n = len(M)
    class_of = [-1] * n
    reps: list[int] = []
    for a in range(n):
        if class_of[a] >= 0:
            continue
        cid = len(reps)
        reps.append(a)
        for b in range(a, n):
            if class_of[b] < 0 and M[M[a][b]][a] == a and M[M[b][a]][b] == b:
                class_of[b] = cid
    return any(
        all(class_of[M[rb][rt]] == class_of[rb] for rb in reps) for rt in reps
    )


def _census_forms(order: int, filt: CensusFilter) -> set[CanonicalForm]:
    n = order
    meet_hooks: list[Hook] = []
    if filt.left_handed is True:
        meet_hooks.append(_left_handed_hook)
    if filt.normal is True:
        meet_hooks.append(_normal_hook)
    full_range = tuple(range(n))
    forms: set[CanonicalForm] = set()
    for M in _table_search(n, [], lambda i, j: full_range, tuple(meet_hooks)):
        if not _band_regular(M) or not _band_has_top_class(M):
            continue
        cand = [
            [tuple(v for v in range(n) if M[i][v] == i and M[v][j] == j) for j in range(n)]
            for i in range(n)
        ]
        if any(not cand[i][j] for i in range(n) for j in range(n) if i != j):
            continue
        pins: list[tuple[int, int, int]] = []
        for x in range(n):
            for y in range(n):
                w = M[x][y]
                pins.append((x, w, x))
                pins.append((w, y, y))
        for J in _table_search(n, pins, lambda i, j: cand[i][j], ()):
            S = FiniteSkewLattice(n, M, J)
            if not S.validity.ok:  # the search guarantees this; keep the net
                continue
            if filt.matches(S):
                forms.add(canonicalize(S))
    return forms


def enumerate_skew_lattices(
    order: int, filt: CensusFilter | None = None, order_cap: int | None = None
) -> Iterator[FiniteSkewLattice]:
    """Yield one representative per isomorphism class, in canonical order.

    Every yielded structure is valid, carries its zero when one exists,
    and is the realization of its own canonical form, so runs are
    reproducible.  The default order cap is 4, or 5 when a filter is
    active; raise it with ``order_cap`` or the SKEWLAT_ORDER_CAP
    environment variable if you mean it.
    """
    if order < 1:
        raise PreconditionError(f"census needs order >= 1, got {order}")
    filt = filt or CensusFilter()
    cap = _effective_cap(order_cap, DEFAULT_CAP_FILTERED if filt.active else DEFAULT_CAP_UNFILTERED)
    if order > cap:
        raise CapExceededError(f"census order {order} > cap {cap}; pass order_cap to override")
    for cf in sorted(_census_forms(order, filt)):
        yield _realize(cf)


# --- independent cross-check construction --------------------------------

def _labeled_lattices(q: int) -> list[tuple[Table, Table]]:
    out: list[tuple[Table, Table]] = []
    pairs = [(i, j) for i in range(q) for j in range(q) if i != j]
    for bits in itertools.product((False, True), repeat=len(pairs)):
        leq = [[i == j for j in range(q)] for i in range(q)]
        for (i, j), b in zip(pairs, bits):
            if b:
                leq[i][j] = True
        try:
            lat = lattice_from_order(leq)
        except PreconditionError:
            continue
        out.append((lat.meet_table, lat.join_table))
    return out


def _compositions(n: int, q: int) -> Iterator[tuple[int, ...]]:
    if q == 1:
        yield (n,)
        return
    for first in range(1, n - q + 2):
        for rest in _compositions(n - first, q - 1):
            yield (first,) + rest


def _assoc_plain(T: Table) -> bool:
    n = len(T)
    return all(
        T[T[a][b]][c] == T[a][T[b][c]] for a in range(n) for b in range(n) for c in range(n)
    )


def _absorption_plain(M: Table, J: Table) -> bool:
    n = len(M)
    for x in range(n):
        for y in range(n):
            if M[x][J[x][y]] != x or J[x][M[x][y]] != x:
                return False
            if J[M[x][y]][y] != y or M[J[x][y]][y] != y:
                return False
    return True


def _block_tables(n: int, cls: list[int], blocks: list[tuple[int, ...]], qtable: Table) -> list[Table]:
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    allowed = [blocks[qtable[cls[i]][cls[j]]] for i, j in cells]
    out = []
    for choice in itertools.product(*allowed):
        T = [[i if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(cells, choice):
            T[i][j] = v
        table = tuple(tuple(r) for r in T)
        if _assoc_plain(table):
            out.append(table)
    return out


def enumerate_by_quotient_construction(order: int) -> set[CanonicalForm]:
    """Slow, independent enumeration used to cross-check census counts.

    Every skew lattice projects onto a lattice of D-classes, so every
    isomorphism class arises from some labeled lattice on q points, a
    composition of the order into q block sizes, and tables confined to
    the blocks dictated by the class products.  This generates exactly
    those candidates and keeps the ones satisfying all axioms; no
    pruning tricks are shared with the main search.  Exponential, hence
    capped at order 3.
    """
    if order < 1:
        raise PreconditionError(f"cross-check needs order >= 1, got {order}")
    if order > CROSS_CHECK_CAP:
        raise CapExceededError(f"cross-check construction is supported up to order {CROSS_CHECK_CAP}")
    n = order
    forms: set[CanonicalForm] = set()
    for q in range(1, n + 1):
        for qmeet, qjoin in _labeled_lattices(q):
            for sizes in _compositions(n, q):
                starts = [sum(sizes[:i]) for i in range(q)]
                blocks = [tuple(range(s, s + w)) for s, w in zip(starts, sizes)]
                cls = [c for c, block in enumerate(blocks) for _ in block]
                for M in _block_tables(n, cls, blocks, qmeet):
                    for J in _block_tables(n, cls, blocks, qjoin):
                        if not _absorption_plain(M, J):
                            continue
                        S = FiniteSkewLattice(n, M, J)
                        if S.validity.ok:
                            forms.add(canonicalize(S))
    return forms


# --- predicate registry and counterexample search ------------------------

def _total(check: Callable[[FiniteSkewLattice], object]) -> Callable[[FiniteSkewLattice], bool]:
    # checks with preconditions count as False where the precondition fails
    def run(S: FiniteSkewLattice) -> bool:
        try:
            return bool(check(S))
        except PreconditionError:
            return False

    return run


PREDICATES: dict[str, Callable[[FiniteSkewLattice], bool]] = {
    "validated": lambda S: S.validity.ok,
    "regular": lambda S: check_identity(S, "regular").ok,
    "normal": lambda S: check_identity(S, "normal").ok,
    "distributive": lambda S: check_identity(S, "distributive").ok,
    "strongly_distributive": lambda S: check_identity(S, "strongly_distributive").ok,
    "left_handed": lambda S: check_identity(S, "left_handed").ok,
    "right_handed": lambda S: check_identity(S, "right_handed").ok,
    "symmetric": lambda S: check_symmetric(S).ok,
    "commutative": is_commutative,
    "has_zero": lambda S: detect_zero(S) is not None,
    "lemma_reg": lambda S: check_lemma_reg(S).ok,
    "join_complete": _total(check_join_complete),
    "bounded_above": _total(check_bounded_above),
    "extends_to_sections": _total(check_section_extension),
    "section_exists": _total(check_section_exists),
    "prop_joins": _total(check_prop_joins),
    "implication_chain": _total(check_implication_chain),
    "ncframe": _total(is_ncframe),
    "theorem_ncframes": _total(check_theorem_ncframes),
}


def _predicate(expr: str) -> Callable[[FiniteSkewLattice], bool]:
    names = [part.strip() for part in expr.split("&")]
    fns = []
    for name in names:
        if name not in PREDICATES:
            raise ValueError(f"unknown predicate {name!r}; known: {', '.join(sorted(PREDICATES))}")
        fns.append(PREDICATES[name])
    return lambda S: all(f(S) for f in fns)


def search_counterexample(
    order_max: int, hypothesis: str, conclusion: str, order_cap: int | None = None
) -> FiniteSkewLattice | None:
    """First census structure satisfying the hypothesis but not the conclusion.

    Predicates come from :data:`PREDICATES` and combine with ``&``;
    those that carry preconditions (the completeness and frame checks)
    evaluate to False where their precondition fails.  Orders are
    scanned from 1 to ``order_max`` in canonical enumeration order, so
    the returned counterexample is minimal and stable.  Returns ``None``
    when the implication survives the whole range.
    """
    hyp = _predicate(hypothesis)
    concl = _predicate(conclusion)
    for order in range(1, order_max + 1):
        for S in enumerate_skew_lattices(order, order_cap=order_cap):
            if hyp(S) and not concl(S):
                return S
    return None
