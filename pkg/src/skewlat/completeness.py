"""Completeness properties of finite skew lattices.

A subset commutes when every pair in it commutes under both operations,
which makes commuting subsets exactly the cliques of the commutation
graph.  Over those subsets four properties are decided here, for normal
symmetric structures:

* join completeness — every commuting subset has a supremum in the
  natural order;
* bounded from above — every commuting subset has some upper bound;
* section extension — every commuting subset lies inside a lattice
  section (a commutative transversal subalgebra, one element per
  D-class);
* section existence — at least one lattice section exists.

Each implies the next; ``check_implication_chain`` verifies the chain on
a given structure.  On finite structures all four hold, and the point of
the checkers is to certify that honestly instead of assuming it — the
infinite models in :mod:`skewlat.models` are where they come apart.

``check_prop_joins`` ties joins to the maximal commutative image: a
commuting subset has a supremum exactly when, over the join of its
D-classes, a unique element dominates the subset; the supremum is then
that element and projects onto the class join.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .core import (
    CapExceededError,
    Certificate,
    FiniteSkewLattice,
    PreconditionError,
    check_identity,
    check_symmetric,
    green_d,
    quotient,
    subalgebra,
)

__all__ = [
    "CommutationGraph",
    "CommutingSubset",
    "LatticeSection",
    "commutation_graph",
    "commuting_subset",
    "enumerate_commuting_subsets",
    "sup_natural",
    "inf_natural",
    "join_fold",
    "meet_fold",
    "check_prop_joins",
    "check_join_complete",
    "check_bounded_above",
    "check_section_extension",
    "check_section_exists",
    "lattice_sections",
    "check_implication_chain",
]

SUBSET_ORDER_CAP = 12


@dataclass(frozen=True)
class CommutationGraph:
    """Adjacency of the "commutes under both operations" relation.

    Symmetric, with every vertex adjacent to itself (idempotency).
    """

    order: int
    adjacency: tuple[tuple[bool, ...], ...]

    def adjacent(self, a: int, b: int) -> bool:
        return self.adjacency[a][b]

    def missing_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (a, b)
            for a in range(self.order)
            for b in range(a + 1, self.order)
            if not self.adjacency[a][b]
        )


@dataclass(frozen=True)
class CommutingSubset:
    """A nonempty set of pairwise-commuting elements, as sorted ids."""

    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


@dataclass(frozen=True)
class LatticeSection:
    """A commutative transversal subalgebra, one element per D-class."""

    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


def _require_valid_here(S: FiniteSkewLattice, op: str) -> None:
    if not S.validity.ok:
        law, where = S.validity.witness
        raise PreconditionError(f"{op} needs a valid skew lattice; {law} fails at {where}")


def _require_normal_symmetric(S: FiniteSkewLattice, op: str) -> None:
    _require_valid_here(S, op)
    if not check_identity(S, "normal").ok:
        raise PreconditionError(f"{op} is defined for normal structures only")
    if not check_symmetric(S).ok:
        raise PreconditionError(f"{op} is defined for symmetric structures only")


def commutation_graph(S: FiniteSkewLattice) -> CommutationGraph:
    """The graph whose edges are the pairs commuting under meet and join."""
    _require_valid_here(S, "commutation_graph")
    m, j = S._m, S._j
    adj = (m == m.T) & (j == j.T)
    return CommutationGraph(order=S.order, adjacency=tuple(tuple(bool(v) for v in row) for row in adj))


def commuting_subset(S: FiniteSkewLattice, members: Iterable[int]) -> CommutingSubset:
    """Validate and wrap a set of ids as a commuting subset."""
    ids = tuple(sorted(set(int(v) for v in members)))
    if not ids:
        raise PreconditionError("commuting subsets are nonempty")
    for v in ids:
        if not 0 <= v < S.order:
            raise PreconditionError(f"id {v} out of range 0..{S.order - 1}")
    g = commutation_graph(S)
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            if not g.adjacent(a, b):
                raise PreconditionError(f"elements {a} and {b} do not commute")
    return CommutingSubset(ids)


def enumerate_commuting_subsets(
    S: FiniteSkewLattice, max_size: int | None = None
) -> Iterator[CommutingSubset]:
    """Yield every nonempty commuting subset exactly once.

    Subsets are the cliques of the commutation graph, produced by
    ordered extension in lexicographic order of the sorted member
    tuple — each clique extends only by larger ids adjacent to all
    current members, so no deduplication is needed.  Above order 12 an
    explicit ``max_size`` is required, since the count can explode.
    """
    _require_valid_here(S, "enumerate_commuting_subsets")
    if max_size is None and S.order > SUBSET_ORDER_CAP:
        raise CapExceededError(
            f"order {S.order} > {SUBSET_ORDER_CAP}: pass max_size to bound subset enumeration"
        )
    g = commutation_graph(S)
    adj = g.adjacency

    def extend(current: tuple[int, ...], candidates: list[int]) -> Iterator[CommutingSubset]:
        for i, v in enumerate(candidates):
            grown = current + (v,)
            yield CommutingSubset(grown)
            if max_size is None or len(grown) < max_size:
                yield from extend(grown, [w for w in candidates[i + 1 :] if adj[v][w]])

    yield from extend((), list(range(S.order)))


def sup_natural(S: FiniteSkewLattice, ids: Iterable[int]) -> int | None:
    """Least upper bound of a nonempty set in the natural order, if any."""
    members = _checked_ids(S, ids, "sup_natural")
    leq = S._leq
    ubs = [s for s in range(S.order) if all(leq[c, s] for c in members)]
    least = [s for s in ubs if all(leq[s, u] for u in ubs)]
    return least[0] if least else None


def inf_natural(S: FiniteSkewLattice, ids: Iterable[int]) -> int | None:
    """Greatest lower bound of a nonempty set in the natural order, if any."""
    members = _checked_ids(S, ids, "inf_natural")
    leq = S._leq
    lbs = [s for s in range(S.order) if all(leq[s, c] for c in members)]
    greatest = [s for s in lbs if all(leq[u, s] for u in lbs)]
    return greatest[0] if greatest else None


def _checked_ids(S: FiniteSkewLattice, ids: Iterable[int], op: str) -> tuple[int, ...]:
    _require_valid_here(S, op)
    members = tuple(sorted(set(int(v) for v in ids)))
    if not members:
        raise PreconditionError(f"{op} needs a nonempty set of elements")
    for v in members:
        if not 0 <= v < S.order:
            raise PreconditionError(f"{op}: id {v} out of range 0..{S.order - 1}")
    return members


def _as_commuting(S: FiniteSkewLattice, C) -> CommutingSubset:
    if isinstance(C, CommutingSubset):
        return C
    return commuting_subset(S, C)


def join_fold(S: FiniteSkewLattice, C) -> int:
    """Left fold of the join over a commuting subset in ascending id order.

    For symmetric structures this is a second, independent route to the
    supremum; agreement with :func:`sup_natural` is a tested fact, not a
    definition.
    """
    _require_valid_here(S, "join_fold")
    if not check_symmetric(S).ok:
        raise PreconditionError("join_fold is defined for symmetric structures only")
    members = _as_commuting(S, C).members
    return functools.reduce(lambda a, b: S.join_table[a][b], members)


def meet_fold(S: FiniteSkewLattice, C) -> int:
    """Left fold of the meet over a commuting subset in ascending id order."""
    _require_valid_here(S, "meet_fold")
    if not check_symmetric(S).ok:
        raise PreconditionError("meet_fold is defined for symmetric structures only")
    members = _as_commuting(S, C).members
    return functools.reduce(lambda a, b: S.meet_table[a][b], members)


def check_prop_joins(S: FiniteSkewLattice) -> Certificate:
    """Joins exist exactly where a unique element dominates the class join.

    For each commuting subset C: the supremum of C exists iff, in the
    class of the quotient-join of C's classes, there is exactly one
    element lying above all of C; and when it exists it is that element
    and projects onto the class join.
    """
    _require_normal_symmetric(S, "check_prop_joins")
    dp = green_d(S)
    qj = quotient(S).lattice.join_table
    leq = S._leq
    for C in enumerate_commuting_subsets(S):
        s = sup_natural(S, C.members)
        class_join = functools.reduce(lambda a, b: qj[a][b], [dp.class_of[c] for c in C])
        dominating = [
            a
            for a in dp.classes[class_join]
            if all(leq[c, a] for c in C)
        ]
        ok = (s is not None) == (len(dominating) == 1)
        if ok and s is not None:
            ok = dominating[0] == s and dp.class_of[s] == class_join
        if not ok:
            return Certificate(
                False,
                "join exists iff one element dominates over the class join",
                (
                    ("subset", C.members),
                    ("sup", s),
                    ("class_join", class_join),
                    ("dominating", tuple(dominating)),
                ),
            )
    return Certificate(True, "join exists iff one element dominates over the class join")


def check_join_complete(S: FiniteSkewLattice) -> Certificate:
    """Every commuting subset has a supremum in the natural order."""
    _require_normal_symmetric(S, "check_join_complete")
    for C in enumerate_commuting_subsets(S):
        if sup_natural(S, C.members) is None:
            return Certificate(False, "join complete", ("subset with no supremum", C.members))
    return Certificate(True, "join complete")


def check_bounded_above(S: FiniteSkewLattice) -> Certificate:
    """Every commuting subset has an upper bound in the natural order."""
    _require_normal_symmetric(S, "check_bounded_above")
    leq = S._leq
    for C in enumerate_commuting_subsets(S):
        if not any(all(leq[c, s] for c in C) for s in range(S.order)):
            return Certificate(False, "bounded from above", ("subset with no upper bound", C.members))
    return Certificate(True, "bounded from above")


def check_section_extension(S: FiniteSkewLattice) -> Certificate:
    """Every commuting subset extends to (sits inside) a lattice section."""
    _require_normal_symmetric(S, "check_section_extension")
    sections = [set(sec.members) for sec in lattice_sections(S)]
    for C in enumerate_commuting_subsets(S):
        if not any(set(C.members) <= sec for sec in sections):
            return Certificate(
                False, "commuting subsets extend to sections", ("subset inside no section", C.members)
            )
    return Certificate(True, "commuting subsets extend to sections")


def check_section_exists(S: FiniteSkewLattice) -> Certificate:
    """At least one lattice section exists; the witness is the first one."""
    _require_normal_symmetric(S, "check_section_exists")
    sections = lattice_sections(S)
    if not sections:
        return Certificate(False, "a lattice section exists")
    return Certificate(True, "a lattice section exists", ("section", sections[0].members))


def _is_section(S: FiniteSkewLattice, members: tuple[int, ...]) -> bool:
    dp = green_d(S)
    if sorted(dp.class_of[x] for x in members) != list(range(dp.class_count)):
        return False
    mem = set(members)
    mt, jt = S.meet_table, S.join_table
    for a in members:
        for b in members:
            if mt[a][b] not in mem or jt[a][b] not in mem:
                return False
            if mt[a][b] != mt[b][a] or jt[a][b] != jt[b][a]:
                return False
    return True


def lattice_sections(S: FiniteSkewLattice) -> tuple[LatticeSection, ...]:
    """All lattice sections, sorted by member tuple.

    For a normal structure the sections are exactly the down-sets of the
    top class's elements, so those are collected and verified; without
    normality the search falls back to checking every class transversal.
    Tests hold the fast path against the brute-force one.
    """
    _require_valid_here(S, "lattice_sections")
    if not check_symmetric(S).ok:
        raise PreconditionError("lattice_sections is defined for symmetric structures only")
    dp = green_d(S)
    leq = S._leq
    found: list[tuple[int, ...]] = []
    if check_identity(S, "normal").ok and dp.top_class is not None:
        for t in dp.classes[dp.top_class]:
            members = tuple(int(u) for u in np.flatnonzero(leq[:, t]))
            if _is_section(S, members):
                found.append(members)
    else:
        import itertools as _it

        for combo in _it.product(*dp.classes):
            members = tuple(sorted(combo))
            if _is_section(S, members):
                found.append(members)
    return tuple(LatticeSection(members) for members in sorted(found))


def check_implication_chain(S: FiniteSkewLattice) -> Certificate:
    """Verify join-complete ⇒ bounded ⇒ extends-to-sections ⇒ section-exists.

    The witness records all four verdicts; a false certificate names the
    first implication whose premise holds while its conclusion fails.
    """
    _require_normal_symmetric(S, "check_implication_chain")
    results = (
        ("join_complete", check_join_complete(S).ok),
        ("bounded_above", check_bounded_above(S).ok),
        ("extends_to_sections", check_section_extension(S).ok),
        ("section_exists", check_section_exists(S).ok),
    )
    for (name_a, a), (name_b, b) in zip(results, results[1:]):
        if a and not b:
            return Certificate(
                False, "completeness implication chain", (("broken", f"{name_a} ⇒ {name_b}"),) + results
            )
    return Certificate(True, "completeness implication chain", results)
