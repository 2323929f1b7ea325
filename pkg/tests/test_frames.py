"""Frame checks, the noncommutative variant, and the equivalence verifier."""

import pytest

from skewlat.census import canonicalize, enumerate_skew_lattices
from skewlat.completeness import enumerate_commuting_subsets, sup_natural
from skewlat.core import (
    FiniteSkewLattice,
    Homomorphism,
    PreconditionError,
    check_identity,
    detect_zero,
    green_d,
    is_homomorphism,
    natural_leq,
    quotient,
    subalgebra,
)
from skewlat.frames import FrameVerdict, check_theorem_ncframes, is_frame, is_ncframe
from skewlat.models import boolean_lattice, build_pfn_algebra, chain_lattice, diamond_m3, om_window


def _sd_with_zero(max_order=4):
    for n in range(1, max_order + 1):
        for S in enumerate_skew_lattices(n):
            if detect_zero(S) is not None and check_identity(S, "strongly_distributive").ok:
                yield S


# --- frames ----------------------------------------------------------------

def test_boolean_lattice_is_a_frame(b2):
    verdict = is_frame(b2)
    assert verdict.is_frame and bool(verdict)
    assert verdict.failing_instance is None


def test_chains_are_frames():
    assert is_frame(chain_lattice(3)).is_frame
    assert is_frame(chain_lattice(1)).is_frame


def test_diamond_fails_with_reusable_witness(m3):
    verdict = is_frame(m3)
    assert not verdict.is_frame
    x, ys = verdict.failing_instance
    assert (x, ys) == (3, (1, 2))
    joined = 0
    for y in ys:
        joined = m3.join(joined, y)
    folded = 0
    for y in ys:
        folded = m3.join(folded, m3.meet(x, y))
    assert m3.meet(x, joined) != folded


def test_quotient_objects_are_accepted(p22):
    assert is_frame(quotient(p22)).is_frame


def test_noncommutative_input_is_rejected(flat_left):
    with pytest.raises(PreconditionError):
        is_frame(flat_left)


def test_invalid_input_is_rejected():
    proj = ((0, 0), (1, 1))
    with pytest.raises(PreconditionError):
        is_frame(FiniteSkewLattice(2, proj, proj))


def test_exhaustive_and_pairwise_checks_agree(census_by_order, m3, b2):
    # subset_cap=0 forces the pairwise route on every input
    lattices = [quotient(S).lattice for n in census_by_order for S in census_by_order[n]]
    lattices += [m3, b2, chain_lattice(4), boolean_lattice(3)]
    for L in lattices:
        exhaustive = is_frame(L)
        pairwise = is_frame(L, subset_cap=0)
        assert exhaustive.is_frame == pairwise.is_frame


# --- noncommutative frames ------------------------------------------------------

def test_partial_functions_and_windows_are_ncframes(p22, window4):
    assert is_ncframe(build_pfn_algebra(1, 2)).ok
    assert is_ncframe(p22).ok
    assert is_ncframe(om_window(3)).ok
    assert is_ncframe(window4).ok


def test_missing_zero_is_the_first_reason(flat_left):
    cert = is_ncframe(flat_left)
    assert not cert.ok
    assert cert.witness == ("no zero", None)


def test_weak_distributivity_is_reported(m3):
    cert = is_ncframe(m3)
    assert not cert.ok
    reason, detail = cert.witness
    assert "distributive" in reason


def test_every_small_strongly_distributive_structure_with_zero_is_an_ncframe():
    checked = 0
    for S in _sd_with_zero(4):
        assert is_ncframe(S).ok
        checked += 1
    assert checked > 0


# --- proof-step invariants ---------------------------------------------------------

def test_translated_suprema_stay_below_the_meet(p22, window4):
    # sup of {x ∧ y : y in Y} never exceeds x ∧ sup Y
    for S in [*_sd_with_zero(3), p22, window4]:
        for c in enumerate_commuting_subsets(S):
            s = sup_natural(S, c.members)
            if s is None:
                continue
            for x in range(S.order):
                translated = {S.meet(x, y) for y in c.members}
                t = sup_natural(S, translated)
                assert t is not None
                assert natural_leq(S, t, S.meet(x, s))


def test_meet_is_monotone_on_strongly_distributive_structures(p22):
    for S in [*_sd_with_zero(3), p22]:
        for x in range(S.order):
            for y in range(S.order):
                for z in range(S.order):
                    if natural_leq(S, y, z):
                        assert natural_leq(S, S.meet(x, y), S.meet(x, z))


# --- the equivalence verifier ---------------------------------------------------------

def test_equivalence_holds_on_the_models(p22, window4):
    for S in (p22, window4, build_pfn_algebra(1, 2), chain_lattice(3), boolean_lattice(2)):
        cert = check_theorem_ncframes(S)
        assert cert.ok
        evidence = dict(cert.witness)
        assert evidence["ncframe"] is True and evidence["shadow_is_frame"] is True


def test_trivial_structure_passes():
    one = FiniteSkewLattice(1, ((0,),), ((0,),), zero=0)
    assert check_theorem_ncframes(one).ok


def test_equivalence_across_the_census():
    checked = 0
    for S in _sd_with_zero(4):
        assert check_theorem_ncframes(S).ok
        checked += 1
    assert checked >= 10


def test_preconditions_are_enforced(m3, flat_left):
    with pytest.raises(PreconditionError):
        check_theorem_ncframes(m3)  # not strongly distributive
    with pytest.raises(PreconditionError):
        check_theorem_ncframes(flat_left)  # no zero
    proj = ((0, 0), (1, 1))
    with pytest.raises(PreconditionError):
        check_theorem_ncframes(FiniteSkewLattice(2, proj, proj))  # invalid


# --- the converse direction: top down-sets copy the quotient ---------------------------

def test_top_element_downsets_are_copies_of_the_quotient(p22, window4):
    for S in [*_sd_with_zero(4), p22, window4]:
        dp = green_d(S)
        q = quotient(S)
        for t in dp.classes[dp.top_class]:
            members = tuple(d for d in range(S.order) if natural_leq(S, d, t))
            sub = subalgebra(S, members)
            assert sub.order == q.lattice.order
            mapping = tuple(dp.class_of[m] for m in members)
            assert len(set(mapping)) == sub.order
            assert is_homomorphism(Homomorphism(sub, q.lattice, mapping)).ok
            assert canonicalize(sub) == canonicalize(q.lattice)
