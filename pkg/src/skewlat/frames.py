"""Frames and their noncommutative counterparts.

A frame is a complete lattice in which finite meets distribute over
arbitrary joins.  The noncommutative analogue asks a skew lattice to be
strongly distributive with a zero, join complete over commuting
subsets, and to satisfy both infinite distributive laws

    (⋁ xᵢ) ∧ y = ⋁ (xᵢ ∧ y)        y ∧ (⋁ xᵢ) = ⋁ (y ∧ xᵢ)

over every commuting subset.  ``check_theorem_ncframes`` decides the
equivalence that justifies the name: such a structure is a
noncommutative frame exactly when its maximal commutative image is a
frame.  On finite input everything is decidable by exhaustive scans,
and both sides of the equivalence are computed honestly rather than one
being inferred from the other.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .core import (
    Certificate,
    FiniteSkewLattice,
    PreconditionError,
    QuotientLattice,
    check_identity,
    detect_zero,
    is_commutative,
    quotient,
)
from .completeness import enumerate_commuting_subsets, sup_natural

__all__ = ["FrameVerdict", "is_frame", "is_ncframe", "check_theorem_ncframes"]

SUBSET_DISTRIBUTIVITY_CAP = 12


@dataclass(frozen=True)
class FrameVerdict:
    """Outcome of the frame test, with the failing instance when false.

    ``failing_instance`` is ``(x, Y)`` with ``x ∧ ⋁Y ≠ ⋁(x ∧ y for y in Y)``.
    """

    is_frame: bool
    failing_instance: tuple[int, tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.is_frame


def _as_commutative_lattice(L, op: str) -> FiniteSkewLattice:
    lat = L.lattice if isinstance(L, QuotientLattice) else L
    if not lat.validity.ok:
        law, where = lat.validity.witness
        raise PreconditionError(f"{op} needs a valid structure; {law} fails at {where}")
    if not is_commutative(lat):
        raise PreconditionError(f"{op} is defined for commutative structures (lattices) only")
    return lat


def is_frame(L, subset_cap: int = SUBSET_DISTRIBUTIVITY_CAP) -> FrameVerdict:
    """Decide whether a finite lattice is a frame.

    A finite lattice is complete outright, so the content is meet
    distributivity over joins of subsets.  Up to ``subset_cap`` elements
    every nonempty subset is checked; beyond that the scan falls back to
    pairwise distributivity, which is equivalent on finite lattices (the
    equivalence itself is property-tested in the small range).
    """
    lat = _as_commutative_lattice(L, "is_frame")
    n = lat.order
    mt, jt = lat.meet_table, lat.join_table
    if n <= subset_cap:
        for size in range(1, n + 1):
            for Y in itertools.combinations(range(n), size):
                join_y = functools.reduce(lambda a, b: jt[a][b], Y)
                for x in range(n):
                    lhs = mt[x][join_y]
                    rhs = functools.reduce(lambda a, b: jt[a][b], [mt[x][y] for y in Y])
                    if lhs != rhs:
                        return FrameVerdict(False, (x, Y))
        return FrameVerdict(True)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mt[x][jt[y][z]] != jt[mt[x][y]][mt[x][z]]:
                    return FrameVerdict(False, (x, (y, z)))
    return FrameVerdict(True)


def is_ncframe(S: FiniteSkewLattice) -> Certificate:
    """Decide whether a finite skew lattice is a noncommutative frame.

    Checks, in order: a zero element exists; the structure is strongly
    distributive; every commuting subset has a supremum (automatic on
    finite input, still verified); and both infinite distributive laws
    hold over every commuting subset.  The right-hand sides are suprema
    of the translated families, so a missing supremum there also fails
    the law.
    """
    if not S.validity.ok:
        law, where = S.validity.witness
        raise PreconditionError(f"is_ncframe needs a valid structure; {law} fails at {where}")
    if detect_zero(S) is None:
        return Certificate(False, "noncommutative frame", ("no zero", None))
    sd = check_identity(S, "strongly_distributive")
    if not sd.ok:
        return Certificate(False, "noncommutative frame", ("not strongly distributive", sd.witness))
    mt = S.meet_table
    for C in enumerate_commuting_subsets(S):
        sup_c = sup_natural(S, C.members)
        if sup_c is None:
            return Certificate(False, "noncommutative frame", ("commuting subset with no supremum", C.members))
        for y in range(S.order):
            for law, lhs, family in (
                ("(⋁xᵢ)∧y = ⋁(xᵢ∧y)", mt[sup_c][y], [mt[c][y] for c in C]),
                ("y∧(⋁xᵢ) = ⋁(y∧xᵢ)", mt[y][sup_c], [mt[y][c] for c in C]),
            ):
                rhs = sup_natural(S, family)
                if rhs != lhs:
                    return Certificate(
                        False,
                        "noncommutative frame",
                        (law, (("subset", C.members), ("y", y), ("lhs", lhs), ("rhs", rhs))),
                    )
    return Certificate(True, "noncommutative frame")


def check_theorem_ncframes(S: FiniteSkewLattice) -> Certificate:
    """Noncommutative frame ⇔ the maximal commutative image is a frame.

    Preconditions mirror the hypotheses: a valid, strongly distributive
    structure with a zero (finite, hence join complete — the ncframe
    side re-verifies that).  Both sides are computed independently and
    compared; the witness records the two verdicts and their evidence.
    """
    if not S.validity.ok:
        law, where = S.validity.witness
        raise PreconditionError(f"check_theorem_ncframes needs a valid structure; {law} fails at {where}")
    if detect_zero(S) is None:
        raise PreconditionError("check_theorem_ncframes needs a zero element")
    sd = check_identity(S, "strongly_distributive")
    if not sd.ok:
        raise PreconditionError(f"check_theorem_ncframes needs strong distributivity; witness {sd.witness}")
    ncf = is_ncframe(S)
    shadow = is_frame(quotient(S))
    return Certificate(
        ok=ncf.ok == shadow.is_frame,
        checked="noncommutative frame iff commutative image is a frame",
        witness=(
            ("ncframe", ncf.ok),
            ("ncframe_evidence", ncf.witness),
            ("shadow_is_frame", shadow.is_frame),
            ("shadow_evidence", shadow.failing_instance),
        ),
    )
