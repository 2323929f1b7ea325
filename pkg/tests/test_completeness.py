"""Commuting subsets, suprema, sections and the completeness checks."""

import itertools

import pytest

from skewlat.core import (
    CapExceededError,
    FiniteSkewLattice,
    PreconditionError,
    green_d,
    is_commutative,
    subalgebra,
)
from skewlat.completeness import (
    check_bounded_above,
    check_implication_chain,
    check_join_complete,
    check_prop_joins,
    check_section_exists,
    check_section_extension,
    commutation_graph,
    commuting_subset,
    enumerate_commuting_subsets,
    inf_natural,
    join_fold,
    lattice_sections,
    meet_fold,
    sup_natural,
)
from skewlat.models import build_pfn_algebra, chain_lattice, om_window

NON_NORMAL_3 = FiniteSkewLattice(
    3, ((0, 0, 0), (0, 1, 2), (2, 2, 2)), ((0, 1, 2), (1, 1, 1), (0, 1, 2))
)


def _brute_commuting_subsets(S):
    g = commutation_graph(S)
    out = []
    for size in range(1, S.order + 1):
        for members in itertools.combinations(range(S.order), size):
            if all(g.adjacent(a, b) for a, b in itertools.combinations(members, 2)):
                out.append(members)
    return sorted(out)


# --- the commutation graph ---------------------------------------------------

def test_graph_is_reflexive_and_symmetric(p22):
    g = commutation_graph(p22)
    for a in range(p22.order):
        assert g.adjacent(a, a)
        for b in range(p22.order):
            assert g.adjacent(a, b) == g.adjacent(b, a)


def test_window_graph_misses_exactly_the_top_pair():
    g = commutation_graph(om_window(5))
    assert g.missing_edges() == ((6, 7),)


def test_lattice_graph_is_complete(b2):
    assert commutation_graph(b2).missing_edges() == ()


def test_same_class_elements_do_not_commute(flat_left):
    assert commutation_graph(flat_left).missing_edges() == ((0, 1),)


# --- commuting subsets ----------------------------------------------------------

def test_subset_factory_validates(p22):
    c = commuting_subset(p22, [3, 1, 0])
    assert c.members == (0, 1, 3)
    with pytest.raises(PreconditionError):
        commuting_subset(p22, [1, 2])  # same class, projections differ
    with pytest.raises(PreconditionError):
        commuting_subset(p22, [])


def test_enumeration_matches_brute_force(p22, window4):
    for S in (p22, window4):
        got = sorted(c.members for c in enumerate_commuting_subsets(S))
        assert got == _brute_commuting_subsets(S)


def test_enumeration_counts_frozen(p22):
    assert len(tuple(enumerate_commuting_subsets(p22))) == 49
    assert len(tuple(enumerate_commuting_subsets(om_window(1)))) == 11


def test_enumeration_respects_max_size(p22):
    pairs = tuple(enumerate_commuting_subsets(p22, max_size=2))
    assert all(len(c) <= 2 for c in pairs)
    brute = [m for m in _brute_commuting_subsets(p22) if len(m) <= 2]
    assert sorted(c.members for c in pairs) == brute


def test_enumeration_cap_without_size_bound():
    big = om_window(10)  # order 13
    with pytest.raises(CapExceededError):
        tuple(enumerate_commuting_subsets(big))
    assert tuple(enumerate_commuting_subsets(big, max_size=1))


# --- suprema and infima ------------------------------------------------------------

def test_sup_of_compatible_functions_is_their_union(p22):
    # {1:0} with {0:0} -> {0:0,1:0}
    assert sup_natural(p22, [1, 3]) == 4


def test_conflicting_functions_have_no_sup(p22):
    assert sup_natural(p22, [1, 2]) is None


def test_inf_is_the_common_restriction(p22):
    assert inf_natural(p22, [4, 8]) == 0
    assert inf_natural(p22, [4, 5]) == 3  # agree on 0 only


def test_top_pair_infimum_in_window():
    W = om_window(3)
    assert inf_natural(W, [4, 5]) == 3
    assert sup_natural(W, [0, 1, 2]) == 2


def test_sup_requires_members_in_range(chain2):
    with pytest.raises(PreconditionError):
        sup_natural(chain2, [0, 5])
    with pytest.raises(PreconditionError):
        sup_natural(chain2, [])


def test_folds_agree_with_order_suprema(p22, window4):
    for S in (p22, window4):
        for c in enumerate_commuting_subsets(S):
            assert join_fold(S, c) == sup_natural(S, c.members)
            assert meet_fold(S, c) == inf_natural(S, c.members)


def test_fold_accepts_raw_ids(chain2):
    assert join_fold(chain2, [0, 1]) == 1
    assert meet_fold(chain2, (1, 0)) == 0


def test_fold_rejects_non_commuting(p22):
    with pytest.raises(PreconditionError):
        join_fold(p22, [1, 2])


# --- characterization of suprema ------------------------------------------------------

def test_sup_characterization_on_models(p22, window4, b2):
    for S in (p22, window4, b2, chain_lattice(5)):
        assert check_prop_joins(S).ok


def test_sup_characterization_needs_normal_symmetric():
    with pytest.raises(PreconditionError):
        check_prop_joins(NON_NORMAL_3)


# --- completeness properties -----------------------------------------------------------

def test_all_four_properties_on_finite_models(p22, window4):
    for S in (p22, window4):
        assert check_join_complete(S).ok
        assert check_bounded_above(S).ok
        assert check_section_extension(S).ok
        assert check_section_exists(S).ok


def test_implication_chain_reports_all_verdicts(p22):
    cert = check_implication_chain(p22)
    assert cert.ok
    assert dict(cert.witness) == {
        "join_complete": True,
        "bounded_above": True,
        "extends_to_sections": True,
        "section_exists": True,
    }


def test_chain_requires_normal_symmetric():
    with pytest.raises(PreconditionError):
        check_implication_chain(NON_NORMAL_3)


# --- lattice sections --------------------------------------------------------------------

def test_sections_of_partial_functions_are_the_total_function_downsets(p22):
    secs = lattice_sections(p22)
    assert tuple(s.members for s in secs) == (
        (0, 1, 3, 4),
        (0, 1, 6, 7),
        (0, 2, 3, 5),
        (0, 2, 6, 8),
    )


def test_each_section_is_a_commutative_transversal(p22):
    dp = green_d(p22)
    for sec in lattice_sections(p22):
        sub = subalgebra(p22, sec.members)
        assert is_commutative(sub)
        per_class = [sum(1 for m in sec.members if dp.class_of[m] == c) for c in range(dp.class_count)]
        assert per_class == [1] * dp.class_count


def _brute_sections(S):
    dp = green_d(S)
    found = []
    for choice in itertools.product(*dp.classes):
        members = tuple(sorted(choice))
        try:
            sub = subalgebra(S, members)
        except PreconditionError:
            continue
        if is_commutative(sub):
            found.append(members)
    return sorted(found)


def test_fast_path_matches_transversal_scan(p22, window4):
    for S in (p22, window4):
        assert sorted(s.members for s in lattice_sections(S)) == _brute_sections(S)


def test_sections_without_normality_use_the_fallback():
    secs = lattice_sections(NON_NORMAL_3)
    assert tuple(s.members for s in secs) == ((0, 1), (1, 2))
    assert _brute_sections(NON_NORMAL_3) == [(0, 1), (1, 2)]


def test_window_has_one_section_per_top():
    W = om_window(3)
    assert tuple(s.members for s in lattice_sections(W)) == ((0, 1, 2, 3, 4), (0, 1, 2, 3, 5))
