"""Finite skew lattices as operation tables.

A skew lattice is a set with two idempotent, associative operations
(``meet`` and ``join``) tied together by four absorption identities.
Neither operation is assumed commutative; a commutative skew lattice is
exactly a lattice.  This module holds the finite table representation
and the structural toolkit on top of it: axiom validation with concrete
witnesses, the catalogue of extra identities (regularity, normality,
distributivity, handedness), the D-equivalence whose quotient is the
maximal commutative image, the natural partial order, down-sets,
restrictions and homomorphisms.

Elements are the positions ``0 .. order-1``; optional labels are for
display only and never affect computation.  Construction only checks
that the raw tables are well formed.  Whether the tables actually
satisfy the skew lattice axioms is a separate, explicit question
answered by :func:`validate_skew_axioms`; operations that need a valid
structure check that verdict (cached on the instance) before working.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable

import numpy as np

__all__ = [
    "SkewLatticeError",
    "StructureError",
    "PreconditionError",
    "InternalConsistencyError",
    "CapExceededError",
    "Certificate",
    "FiniteSkewLattice",
    "DPartition",
    "QuotientLattice",
    "Homomorphism",
    "IDENTITY_NAMES",
    "validate_skew_axioms",
    "check_identity",
    "check_symmetric",
    "green_d",
    "natural_leq",
    "quotient",
    "check_lemma_reg",
    "is_homomorphism",
    "down_set",
    "restriction",
    "subalgebra",
    "is_commutative",
    "detect_zero",
    "lattice_from_order",
]


class SkewLatticeError(Exception):
    """Base class for every error raised by this package."""


class StructureError(SkewLatticeError):
    """Malformed raw data: non-square tables, out-of-range ids, bad labels."""


class PreconditionError(SkewLatticeError):
    """An operation was called on input that violates its stated contract."""


class InternalConsistencyError(SkewLatticeError):
    """A derived object failed an invariant that validation should guarantee.

    Seeing this means the input was not what it claimed to be (for
    example a "normal" structure that is not), or there is a bug.
    """


class CapExceededError(PreconditionError):
    """A configured size cap would be exceeded; pass an explicit override."""


@dataclass(frozen=True)
class Certificate:
    """A verdict plus a machine-checkable witness.

    ``checked`` names the property that was decided.  For a false
    verdict the witness pins down a concrete violation, usually a pair
    ``(law, element_tuple)`` that can be re-substituted into the cited
    law.  Checks that produce evidence on success (a supremum, a
    section, a case analysis) put that payload in ``witness`` instead.
    """

    ok: bool
    checked: str
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


Table = tuple[tuple[int, ...], ...]


def _freeze_table(rows: Iterable[Iterable[int]], order: int, which: str) -> Table:
    table = tuple(tuple(int(v) for v in row) for row in rows)
    if len(table) != order:
        raise StructureError(f"{which} table has {len(table)} rows, expected {order}")
    for i, row in enumerate(table):
        if len(row) != order:
            raise StructureError(f"{which} table row {i} has {len(row)} entries, expected {order}")
        for v in row:
            if not 0 <= v < order:
                raise StructureError(f"{which} table entry {v} at row {i} is out of range 0..{order - 1}")
    return table


@dataclass(frozen=True)
class FiniteSkewLattice:
    """Two total operation tables over the carrier ``0 .. order-1``.

    ``zero`` optionally names an element expected to absorb meets and be
    neutral for joins; the claim is verified during validation, not at
    construction.  Derived data (numpy views, the validation verdict,
    the D-partition, the natural order) is computed lazily and cached,
    so the constructor stays cheap for search code that builds many
    candidates.
    """

    order: int
    meet_table: Table
    join_table: Table
    zero: int | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 1:
            raise StructureError(f"order must be a positive integer, got {self.order!r}")
        object.__setattr__(self, "meet_table", _freeze_table(self.meet_table, self.order, "meet"))
        object.__setattr__(self, "join_table", _freeze_table(self.join_table, self.order, "join"))
        if self.zero is not None:
            z = int(self.zero)
            if not 0 <= z < self.order:
                raise StructureError(f"zero id {z} is out of range 0..{self.order - 1}")
            object.__setattr__(self, "zero", z)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.order:
                raise StructureError(f"{len(labels)} labels for order {self.order}")
            object.__setattr__(self, "labels", labels)

    def __repr__(self) -> str:
        return f"FiniteSkewLattice(order={self.order}, zero={self.zero})"

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def _m(self) -> np.ndarray:
        arr = np.asarray(self.meet_table, dtype=np.intp)
        arr.flags.writeable = False
        return arr

    @cached_property
    def _j(self) -> np.ndarray:
        arr = np.asarray(self.join_table, dtype=np.intp)
        arr.flags.writeable = False
        return arr

    @cached_property
    def validity(self) -> Certificate:
        return _axiom_scan(self)

    @property
    def is_valid(self) -> bool:
        return self.validity.ok

    @cached_property
    def _leq(self) -> np.ndarray:
        # natural partial order, meet form: a <= b iff a^b == b^a == a
        m = self._m
        ids = np.arange(self.order)[:, None]
        arr = (m == ids) & (m.T == ids)
        arr.flags.writeable = False
        return arr

    @cached_property
    def _dpart(self) -> "DPartition":
        return _compute_d_partition(self)

    @cached_property
    def _identity_cache(self) -> dict:
        return {}


@dataclass(frozen=True)
class DPartition:
    """The D-equivalence of a skew lattice, plus the induced class order.

    ``class_of[i]`` is the class id of element ``i``; classes are listed
    as sorted tuples, numbered by their least member.  ``class_leq`` is
    the natural order of the quotient.  ``top_class``/``bottom_class``
    hold the greatest/least class when one exists (always, for a valid
    finite structure) and ``None`` otherwise.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    class_leq: tuple[tuple[bool, ...], ...]
    top_class: int | None
    bottom_class: int | None

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def leq(self, a: int, b: int) -> bool:
        return self.class_leq[a][b]

    def same_class(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]


@dataclass(frozen=True)
class QuotientLattice:
    """The maximal commutative image of a skew lattice.

    ``lattice`` is a commutative :class:`FiniteSkewLattice` on the class
    ids of the D-partition, and ``projection`` maps each element to its
    class.  The projection is a surjective homomorphism; both facts are
    verified when the quotient is built.
    """

    lattice: FiniteSkewLattice
    projection: tuple[int, ...]

    def as_homomorphism(self, source: FiniteSkewLattice) -> "Homomorphism":
        return Homomorphism(source=source, target=self.lattice, mapping=self.projection)


@dataclass(frozen=True)
class Homomorphism:
    """A map between carriers, to be checked for preserving both operations."""

    source: FiniteSkewLattice
    target: FiniteSkewLattice
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(int(v) for v in self.mapping)
        if len(mapping) != self.source.order:
            raise StructureError(f"mapping has {len(mapping)} entries for source order {self.source.order}")
        for i, v in enumerate(mapping):
            if not 0 <= v < self.target.order:
                raise StructureError(f"mapping sends {i} to {v}, outside the target carrier")
        object.__setattr__(self, "mapping", mapping)

    def __repr__(self) -> str:
        return f"Homomorphism({self.source.order} -> {self.target.order})"


def _first_true(mask: np.ndarray) -> tuple[int, ...] | None:
    """First True position in row-major (lexicographic) scan order."""
    idx = np.argwhere(mask)
    if idx.shape[0] == 0:
        return None
    return tuple(int(v) for v in idx[0])


def _axiom_scan(S: FiniteSkewLattice) -> Certificate:
    n, m, j = S.order, S._m, S._j
    ids = np.arange(n)
    for label, t in (("meet idempotency x∧x=x", m), ("join idempotency x∨x=x", j)):
        bad = np.flatnonzero(t.diagonal() != ids)
        if bad.size:
            return Certificate(False, "skew lattice axioms", (label, (int(bad[0]),)))
    for label, t in (("meet associativity", m), ("join associativity", j)):
        w = _first_true(t[t, :] != t[:, t])
        if w is not None:
            return Certificate(False, "skew lattice axioms", (label, w))
    X, Y = np.indices((n, n))
    for label, mask in (
        ("absorption x∧(x∨y)=x", m[X, j] != X),
        ("absorption x∨(x∧y)=x", j[X, m] != X),
        ("absorption (x∨y)∧y=y", m[j, Y] != Y),
        ("absorption (x∧y)∨y=y", j[m, Y] != Y),
    ):
        w = _first_true(mask)
        if w is not None:
            return Certificate(False, "skew lattice axioms", (label, w))
    if S.zero is not None:
        z = S.zero
        ok = (m[:, z] == z) & (m[z, :] == z) & (j[:, z] == ids) & (j[z, :] == ids)
        bad = np.flatnonzero(~ok)
        if bad.size:
            return Certificate(
                False, "skew lattice axioms", ("zero laws x∧0=0=0∧x, x∨0=x=0∨x", (int(bad[0]),))
            )
    return Certificate(True, "skew lattice axioms")


def validate_skew_axioms(S: FiniteSkewLattice) -> Certificate:
    """Decide whether the tables satisfy the skew lattice axioms.

    Checks, in a fixed order: idempotency and associativity of both
    operations, the four absorption laws, and (when a zero is declared)
    the zero laws.  The witness of a false verdict is ``(law, tuple)``
    for the first violation in lexicographic scan order.
    """
    return S.validity


def _require_valid(S: FiniteSkewLattice, op: str) -> None:
    cert = S.validity
    if not cert.ok:
        law, where = cert.witness
        raise PreconditionError(f"{op} needs a valid skew lattice; {law} fails at {where}")


IDENTITY_NAMES = (
    "regular",
    "normal",
    "distributive",
    "strongly_distributive",
    "left_handed",
    "right_handed",
)


def _identity_masks(S: FiniteSkewLattice, name: str) -> tuple[tuple[str, np.ndarray], ...]:
    n, m, j = S.order, S._m, S._j
    if name in ("left_handed", "right_handed"):
        X, Y = np.indices((n, n))
        if name == "left_handed":
            return (
                ("x∧y∧x = x∧y", m[m, X] != m),
                ("x∨y∨x = y∨x", j[j, X] != j[Y, X]),
            )
        return (
            ("x∧y∧x = y∧x", m[m, X] != m[Y, X]),
            ("x∨y∨x = x∨y", j[j, X] != j),
        )
    X, Y, Z = np.indices((n, n, n))
    if name == "regular":
        mx = m[X, Y]
        jx = j[X, Y]
        return (
            ("x∧y∧x∧z∧x = x∧y∧z∧x", m[m[m[mx, X], Z], X] != m[m[mx, Z], X]),
            ("x∨y∨x∨z∨x = x∨y∨z∨x", j[j[j[jx, X], Z], X] != j[j[jx, Z], X]),
        )
    if name == "normal":
        return (("x∧y∧z∧x = x∧z∧y∧x", m[m[m[X, Y], Z], X] != m[m[m[X, Z], Y], X]),)
    if name == "distributive":
        return (
            (
                "x∧(y∨z)∧x = (x∧y∧x)∨(x∧z∧x)",
                m[m[X, j[Y, Z]], X] != j[m[m[X, Y], X], m[m[X, Z], X]],
            ),
            (
                "x∨(y∧z)∨x = (x∨y∨x)∧(x∨z∨x)",
                j[j[X, m[Y, Z]], X] != m[j[j[X, Y], X], j[j[X, Z], X]],
            ),
        )
    if name == "strongly_distributive":
        return (
            ("(x∨y)∧z = (x∧z)∨(y∧z)", m[j[X, Y], Z] != j[m[X, Z], m[Y, Z]]),
            ("x∧(y∨z) = (x∧y)∨(x∧z)", m[X, j[Y, Z]] != j[m[X, Y], m[X, Z]]),
        )
    raise ValueError(f"unknown identity {name!r}; known: {', '.join(IDENTITY_NAMES)}")


def check_identity(S: FiniteSkewLattice, name: str) -> Certificate:
    """Decide one of the named extra identities.

    ``regular``, ``distributive`` and ``strongly_distributive`` name a
    pair of dual laws and hold only when both do; ``normal`` is the
    single meet-side law; ``left_handed``/``right_handed`` pair the meet
    and join handedness laws.  The witness cites the violated law of the
    pair together with the first bad tuple.
    """
    if name not in IDENTITY_NAMES:
        raise ValueError(f"unknown identity {name!r}; known: {', '.join(IDENTITY_NAMES)}")
    _require_valid(S, "check_identity")
    cache = S._identity_cache
    if name not in cache:
        verdict: Certificate | None = None
        for law, mask in _identity_masks(S, name):
            w = _first_true(mask)
            if w is not None:
                verdict = Certificate(False, name, (law, w))
                break
        # not `verdict or ...`: a failed Certificate is falsy and would vanish
        cache[name] = Certificate(True, name) if verdict is None else verdict
    return cache[name]


def check_symmetric(S: FiniteSkewLattice) -> Certificate:
    """Check that meets commute exactly where joins do.

    The witness is the first pair on which one operation commutes and
    the other does not.
    """
    _require_valid(S, "check_symmetric")
    m, j = S._m, S._j
    meet_comm = m == m.T
    join_comm = j == j.T
    w = _first_true(meet_comm != join_comm)
    if w is None:
        return Certificate(True, "symmetric")
    a, b = w
    if meet_comm[a, b]:
        law = "x∧y=y∧x but x∨y≠y∨x"
    else:
        law = "x∨y=y∨x but x∧y≠y∧x"
    return Certificate(False, "symmetric", (law, w))


def is_commutative(S: FiniteSkewLattice) -> bool:
    """True when both tables are symmetric, i.e. the structure is a lattice."""
    m, j = S._m, S._j
    return bool((m == m.T).all() and (j == j.T).all())


def detect_zero(S: FiniteSkewLattice) -> int | None:
    """Find the element satisfying the zero laws, if any (it is unique)."""
    m, j = S._m, S._j
    ids = np.arange(S.order)
    for z in range(S.order):
        if (m[:, z] == z).all() and (m[z, :] == z).all() and (j[:, z] == ids).all() and (j[z, :] == ids).all():
            return z
    return None


def _compute_d_partition(S: FiniteSkewLattice) -> DPartition:
    n, m = S.order, S._m
    X, Y = np.indices((n, n))
    aba = m[m, X]  # (a^b)^a
    rel = (aba == X) & (aba.T == Y)
    class_of = [-1] * n
    classes: list[tuple[int, ...]] = []
    for a in range(n):
        if class_of[a] >= 0:
            continue
        members = tuple(int(b) for b in np.flatnonzero(rel[a]))
        for b in members:
            if not np.array_equal(rel[b], rel[a]):
                raise InternalConsistencyError("D-relation is not an equivalence; structure is not a valid skew lattice")
            class_of[b] = len(classes)
        classes.append(members)
    reps = [c[0] for c in classes]
    q = len(classes)
    leq = tuple(
        tuple(class_of[int(m[reps[a], reps[b]])] == a for b in range(q)) for a in range(q)
    )
    top = [a for a in range(q) if all(leq[b][a] for b in range(q))]
    bottom = [a for a in range(q) if all(leq[a][b] for b in range(q))]
    return DPartition(
        class_of=tuple(class_of),
        classes=tuple(classes),
        class_leq=leq,
        top_class=top[0] if top else None,
        bottom_class=bottom[0] if bottom else None,
    )


def green_d(S: FiniteSkewLattice) -> DPartition:
    """Partition the carrier by the D-equivalence a∧b∧a=a, b∧a∧b=b.

    The same classes arise from the join form a∨b∨a=a, b∨a∨b=b; tests
    hold the two characterisations against each other.  The relation is
    a congruence, so it also carries the natural order of the quotient.
    """
    _require_valid(S, "green_d")
    return S._dpart


def natural_leq(S: FiniteSkewLattice, a: int, b: int) -> bool:
    """The natural partial order: a ≤ b iff a∧b = b∧a = a.

    Equivalently a∨b = b = b∨a; the equivalence of the two forms is a
    tested invariant rather than an assumption.
    """
    _require_valid(S, "natural_leq")
    for name, v in (("a", a), ("b", b)):
        if not 0 <= v < S.order:
            raise PreconditionError(f"natural_leq: id {name}={v} out of range 0..{S.order - 1}")
    return bool(S._leq[a, b])


def quotient(S: FiniteSkewLattice) -> QuotientLattice:
    """Collapse each D-class to a point, giving the maximal lattice image.

    Well-definedness of the induced tables is verified over every pair
    of representatives, and the result must be commutative and valid;
    any failure is an internal-consistency error, since a valid skew
    lattice guarantees both.
    """
    _require_valid(S, "quotient")
    dp = S._dpart
    q = dp.class_count
    c = np.asarray(dp.class_of, dtype=np.intp)
    cm, cj = c[S._m], c[S._j]
    meet_rows = [[0] * q for _ in range(q)]
    join_rows = [[0] * q for _ in range(q)]
    for a, A in enumerate(dp.classes):
        for b, B in enumerate(dp.classes):
            block = np.ix_(A, B)
            for rows, img, opname in ((meet_rows, cm, "meet"), (join_rows, cj, "join")):
                vals = np.unique(img[block])
                if vals.size != 1:
                    raise InternalConsistencyError(
                        f"quotient {opname} not well defined on classes {a},{b}: got classes {vals.tolist()}"
                    )
                rows[a][b] = int(vals[0])
    if S.labels is not None:
        labels = tuple("{" + ",".join(S.label(i) for i in A) + "}" for A in dp.classes)
    else:
        labels = tuple("{" + ",".join(str(i) for i in A) + "}" for A in dp.classes)
    lat = FiniteSkewLattice(
        order=q,
        meet_table=meet_rows,
        join_table=join_rows,
        zero=dp.class_of[S.zero] if S.zero is not None else None,
        labels=labels,
    )
    if not lat.validity.ok:
        law, where = lat.validity.witness
        raise InternalConsistencyError(f"quotient is not a valid structure: {law} fails at {where}")
    if not is_commutative(lat):
        raise InternalConsistencyError("quotient is not commutative")
    return QuotientLattice(lattice=lat, projection=dp.class_of)


def check_lemma_reg(S: FiniteSkewLattice) -> Certificate:
    """Check the sandwich collapse around comparable classes.

    For every (a, b, u, v) with [u] ≤ [a], [u] ≤ [b], [a] ≤ [v] and
    [b] ≤ [v] in the class order, regularity forces a∧v∧b = a∧b and
    a∨u∨b = a∨b.  The witness is the first violating quadruple in
    lexicographic (a, b, u, v) order, tagged with the failing equation.
    """
    _require_valid(S, "check_lemma_reg")
    dp = S._dpart
    n, m, j = S.order, S._m, S._j
    c = np.asarray(dp.class_of, dtype=np.intp)
    cleq = np.asarray(dp.class_leq, dtype=bool)
    B, U, V = np.indices((n, n, n))
    cb, cu, cv = c[B], c[U], c[V]
    for a in range(n):
        ca = dp.class_of[a]
        cond = cleq[cu, ca] & cleq[cu, cb] & cleq[ca, cv] & cleq[cb, cv]
        meet_bad = cond & (m[m[a, V], B] != m[a, B])
        join_bad = cond & (j[j[a, U], B] != j[a, B])
        w = _first_true(meet_bad | join_bad)
        if w is not None:
            b, u, v = w
            law = "a∧v∧b = a∧b" if meet_bad[b, u, v] else "a∨u∨b = a∨b"
            return Certificate(False, "sandwich collapse over comparable classes", (law, (a, b, u, v)))
    return Certificate(True, "sandwich collapse over comparable classes")


def is_homomorphism(h: Homomorphism) -> Certificate:
    """Check that the mapping preserves both operations pointwise."""
    _require_valid(h.source, "is_homomorphism")
    _require_valid(h.target, "is_homomorphism")
    hm = np.asarray(h.mapping, dtype=np.intp)
    sm, sj = h.source._m, h.source._j
    tm, tj = h.target._m, h.target._j
    for law, mask in (
        ("h(x∧y) = h(x)∧h(y)", hm[sm] != tm[hm[:, None], hm[None, :]]),
        ("h(x∨y) = h(x)∨h(y)", hm[sj] != tj[hm[:, None], hm[None, :]]),
    ):
        w = _first_true(mask)
        if w is not None:
            return Certificate(False, "homomorphism", (law, w))
    return Certificate(True, "homomorphism")


def subalgebra(S: FiniteSkewLattice, members: Iterable[int]) -> FiniteSkewLattice:
    """Induce the structure on a subset, re-indexed to 0..k-1 in id order.

    The subset must be closed under both operations.  A declared zero is
    carried over when it belongs to the subset; labels follow the parent.
    """
    ids = sorted(set(int(v) for v in members))
    if not ids:
        raise PreconditionError("subalgebra needs a nonempty subset")
    for v in ids:
        if not 0 <= v < S.order:
            raise PreconditionError(f"subalgebra: id {v} out of range 0..{S.order - 1}")
    index = {v: i for i, v in enumerate(ids)}
    k = len(ids)
    meet_rows = [[0] * k for _ in range(k)]
    join_rows = [[0] * k for _ in range(k)]
    for a in ids:
        for b in ids:
            for rows, table, opname in ((meet_rows, S.meet_table, "meet"), (join_rows, S.join_table, "join")):
                v = table[a][b]
                if v not in index:
                    raise PreconditionError(f"subset not closed: {opname} of {a},{b} is {v}")
                rows[index[a]][index[b]] = index[v]
    return FiniteSkewLattice(
        order=k,
        meet_table=meet_rows,
        join_table=join_rows,
        zero=index[S.zero] if S.zero is not None and S.zero in index else None,
        labels=tuple(S.label(v) for v in ids) if S.labels is not None else None,
    )


def down_set(S: FiniteSkewLattice, a: int) -> FiniteSkewLattice:
    """The induced structure on { u : u ≤ a } in the natural order.

    Down-sets of a valid skew lattice are always closed under both
    operations; a closure failure therefore raises an
    internal-consistency error rather than returning a verdict.
    """
    _require_valid(S, "down_set")
    if not 0 <= a < S.order:
        raise PreconditionError(f"down_set: id {a} out of range 0..{S.order - 1}")
    ids = [int(u) for u in np.flatnonzero(S._leq[:, a])]
    try:
        return subalgebra(S, ids)
    except PreconditionError as exc:
        raise InternalConsistencyError(f"down-set of {a} is not closed: {exc}") from exc


def restriction(S: FiniteSkewLattice, a: int, u: int) -> int:
    """The unique element of class ``u`` lying below ``a``.

    Defined for normal structures and classes ``u ≤ [a]``; existence and
    uniqueness of the witness is exactly what normality buys, so a miss
    is an internal-consistency error.
    """
    _require_valid(S, "restriction")
    if not 0 <= a < S.order:
        raise PreconditionError(f"restriction: id {a} out of range 0..{S.order - 1}")
    if not check_identity(S, "normal").ok:
        raise PreconditionError("restriction is defined for normal structures only")
    dp = S._dpart
    if not 0 <= u < dp.class_count:
        raise PreconditionError(f"restriction: class id {u} out of range 0..{dp.class_count - 1}")
    if not dp.leq(u, dp.class_of[a]):
        raise PreconditionError(f"restriction: class {u} is not below the class of {a}")
    found = [d for d in dp.classes[u] if S._leq[d, a]]
    if len(found) != 1:
        raise InternalConsistencyError(
            f"restriction of {a} to class {u} has {len(found)} witnesses; structure is not normal"
        )
    return found[0]


def lattice_from_order(leq_rows: Iterable[Iterable[bool]]) -> FiniteSkewLattice:
    """Build the (commutative) structure of a finite lattice from its order.

    The input is the full relation matrix of a partial order in which
    every pair has a greatest lower bound and a least upper bound.
    Anything else is rejected.  The bottom element is recorded as zero.
    """
    leq = [[bool(v) for v in row] for row in leq_rows]
    n = len(leq)
    if n == 0 or any(len(row) != n for row in leq):
        raise PreconditionError("order matrix must be square and nonempty")
    for a in range(n):
        if not leq[a][a]:
            raise PreconditionError(f"order not reflexive at {a}")
        for b in range(n):
            if leq[a][b] and leq[b][a] and a != b:
                raise PreconditionError(f"order not antisymmetric at {a},{b}")
            for c in range(n):
                if leq[a][b] and leq[b][c] and not leq[a][c]:
                    raise PreconditionError(f"order not transitive at {a},{b},{c}")
    meet_rows = [[0] * n for _ in range(n)]
    join_rows = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lower = [w for w in range(n) if leq[w][a] and leq[w][b]]
            glb = [w for w in lower if all(leq[x][w] for x in lower)]
            upper = [w for w in range(n) if leq[a][w] and leq[b][w]]
            lub = [w for w in upper if all(leq[w][x] for x in upper)]
            if len(glb) != 1 or len(lub) != 1:
                raise PreconditionError(f"not a lattice: pair {a},{b} lacks a unique bound")
            meet_rows[a][b] = glb[0]
            join_rows[a][b] = lub[0]
    bottom = functools.reduce(lambda x, y: meet_rows[x][y], range(n))
    return FiniteSkewLattice(order=n, meet_table=meet_rows, join_table=join_rows, zero=bottom)
