from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semitop.semigroups import INF, NatInfinity, NatMul
from semitop.topologies import (REP_FOUND, REP_NONE, REP_UNDETERMINED,
                                BasicNbhd, ConvergenceCertificate,
                                DiscreteTopology, OnePointTopology,
                                TopologyInstance, WeightSequence,
                                base_inclusion, base_property_check,
                                check_convergence, convergence_transfer,
                                distinguish_topologies, find_limit,
                                good_corr_check, hausdorff_witness,
                                mask_family, natural_to_odd_pair,
                                odd_pair_to_natural,
                                separate_continuity_identity, verify_star,
                                verify_star_star)
from semitop.verdicts import (DISTINCT, FAIL, FOUND, NOT_APPLICABLE, PASS,
                              UNDETERMINED, VACUOUS)


def Tz(bound=6, mask=None):
    return TopologyInstance("z", WeightSequence.double_exp(bound), mask=mask)


def Todd(bound=6):
    return TopologyInstance("odd_nat", WeightSequence.odd_primes(bound))


# -- weight sequences -------------------------------------------------


def test_double_exp_values():
    w = WeightSequence.double_exp(5)
    assert [w.value(i) for i in range(1, 6)] == [4, 16, 256, 65536, 2 ** 32]


def test_odd_prime_values():
    w = WeightSequence.odd_primes(6)
    assert [w.value(i) for i in range(1, 7)] == [3, 5, 7, 11, 13, 17]


def test_explicit_weights_must_increase():
    with pytest.raises(ValueError):
        WeightSequence.explicit([3, 2])


# -- representations ---------------------------------------------------


def test_rep_double_exp_found():
    T = Tz(6)
    rep = T.find_representation(16 + 256)
    assert rep.status == REP_FOUND and rep.indices == (2, 3)


def test_rep_double_exp_none_cases():
    T = Tz(6)
    assert T.find_representation(5).status == REP_NONE           # 4 + 1
    assert T.find_representation(8).status == REP_NONE           # 2^3 alone
    assert T.find_representation(4, min_index=2).status == REP_NONE


def test_rep_double_exp_undetermined_beyond_bound():
    T = Tz(3)
    huge = 2 ** (2 ** 9)
    assert T.find_representation(huge).status == REP_UNDETERMINED


def test_rep_respects_mask():
    T = Tz(6, mask=[1, 3, 5])
    assert T.find_representation(16).status == REP_NONE
    assert T.find_representation(4 + 256).indices == (1, 3)


def test_rep_odd_primes():
    T = Todd(6)
    assert T.find_representation(Fraction(15)).indices == (1, 2)
    assert T.find_representation(Fraction(9)).status == REP_NONE    # 3 twice
    assert T.find_representation(Fraction(6)).status == REP_NONE    # even part
    assert T.find_representation(Fraction(19)).status == REP_UNDETERMINED


def test_rep_explicit_always_settled():
    T = TopologyInstance("z", WeightSequence.explicit([10, 20, 40]))
    assert T.find_representation(30).indices == (1, 2)
    assert T.find_representation(31).status == REP_NONE
    assert T.find_representation(10 ** 9).status == REP_NONE


# -- membership and its brute-force oracle ------------------------------


def test_member_basic():
    T = Tz(6)
    U = BasicNbhd(2, 0, 1)
    assert T.member(U, (2, 0)).status is True
    assert T.member(U, (1, 16)).status is True
    assert T.member(U, (0, 20)).status is True          # 4 + 16
    assert T.member(U, (0, 16)).status is False         # needs k = 2
    assert T.member(U, (3, 0)).status is False


def test_member_alpha_floor():
    T = Tz(6)
    assert T.member(BasicNbhd(2, 0, 3), (1, 16)).status is False
    assert T.member(BasicNbhd(2, 0, 2), (1, 16)).status is True


def test_member_matches_bruteforce_everywhere():
    # fast arithmetic vs subset enumeration across a full truncated universe
    T = Tz(6)
    w = T.weights
    centers = [0, w.value(1), -w.value(2)]
    points = []
    for x in range(0, 4):
        for combo_len in range(0, 3):
            for combo in combinations(range(1, 7), combo_len):
                for base in centers:
                    points.append((x, base + T.weight_total(combo)))
    checked = 0
    for a in range(0, 4):
        for s in centers:
            for alpha in (1, 2, 4):
                U = BasicNbhd(a, s, alpha)
                for p in points:
                    fast = T.member(U, p)
                    slow = T.member_bruteforce(U, p)
                    assert fast.status == slow.status, (U, p)
                    if fast.status:
                        assert tuple(fast.indices) == tuple(slow.indices)
                    checked += 1
    assert checked > 9000


@settings(max_examples=80)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(1, 5),
       st.sets(st.integers(1, 6), max_size=3), st.booleans())
def test_member_bruteforce_agreement_property(a, x, alpha, idxs, negate):
    T = Tz(6)
    target = T.weight_total(sorted(idxs))
    if negate:
        target = -target + 3
    U = BasicNbhd(a, 0, alpha)
    p = (x, target)
    assert T.member(U, p).status == T.member_bruteforce(U, p).status


# -- inclusion, base property, Hausdorff, separate continuity -----------


def test_base_inclusion_threshold():
    T = Tz(6)
    outer = BasicNbhd(3, 0, 1)
    inner_ok = BasicNbhd(2, 16, 3)      # center (2, w_2), beta > 2
    inner_bad = BasicNbhd(2, 16, 2)
    assert base_inclusion(T, inner_ok, outer).status == PASS
    bad = base_inclusion(T, inner_bad, outer)
    assert bad.status == FAIL
    assert bad.witness["escaping_point"] is not None


def test_base_property_check_produces_enclosures():
    T = Tz(6)
    u1 = BasicNbhd(2, 0, 1)
    u2 = BasicNbhd(2, 0, 2)
    v = base_property_check(T, u1, u2)
    assert v.status == PASS
    assert v.witness["common_points"] > 0


def test_base_property_check_disjoint_pair_is_trivially_fine():
    # different a over the same center leaves no common point: the
    # representation would need two different lengths at once
    T = Tz(6)
    v = base_property_check(T, BasicNbhd(2, 0, 1), BasicNbhd(3, 0, 2))
    assert v.status == PASS
    assert v.witness["common_points"] == 0


def test_hausdorff_witness_same_s():
    T = Tz(6)
    v = hausdorff_witness(T, (0, 0), (2, 0))
    assert v.status == PASS
    assert v.witness["x_nbhd"].alpha == 1
    assert v.witness["y_nbhd"].alpha == 1


def test_hausdorff_witness_representable_difference():
    T = Tz(6)
    v = hausdorff_witness(T, (0, 0), (0, 16))
    assert v.status == PASS
    # difference w_2 has top index 2, so both sets live just above it
    assert v.witness["two_sided"] == ((2,), ())
    assert v.witness["x_nbhd"].alpha == 3
    assert v.witness["y_nbhd"].alpha == 3


def test_hausdorff_exhaustive_small():
    T = Tz(4)
    w = T.weights
    vals = [0, w.value(1), -w.value(1), w.value(2), w.value(1) + w.value(3)]
    pts = [(x, u) for x in (0, 1) for u in vals]
    for p, q in combinations(pts, 2):
        assert hausdorff_witness(T, p, q).status == PASS


def test_separate_continuity_identity_cases():
    T = Tz(6)
    for shift in ((0, 0), (1, 4), (2, -16)):
        v = separate_continuity_identity(T, shift, (1, 0), 2)
        assert v.status == PASS
        assert v.witness["points_checked"] > 0


def test_separate_continuity_odd_base():
    T = Todd(6)
    v = separate_continuity_identity(T, (1, 3), (1, 5), 2)
    assert v.status == PASS


# -- convergence certificates and transfer ------------------------------


def seq_to_limit(T, c, v, start=1):
    w = T.weights
    return [(c - 1, T.s_op(v, w.value(j)))
            for j in range(start, w.index_bound + 1)]


def test_check_convergence_produces_certificate():
    T = Tz(6)
    seq = seq_to_limit(T, 2, 0)
    cert = check_convergence(T, seq, (2, 0), 3)
    assert isinstance(cert, ConvergenceCertificate)
    assert cert.thresholds[1] == 1
    assert cert.thresholds[3] == 3     # first term with index >= 3
    assert cert.revalidate(T, seq)
    assert not cert.revalidate(T, seq[:-1])


def test_check_convergence_detects_divergence():
    T = Tz(6)
    seq = [(1, 3)] * 4                  # 3 is never representable
    out = check_convergence(T, seq, (2, 0), 2)
    assert out.status == FAIL


def test_find_limit_recovers_construction():
    T = Todd(8)
    seq = seq_to_limit(T, 1, 5, start=2)
    got = find_limit(T, seq, 3)
    assert got is not None
    limit, cert = got
    assert limit == (1, 5)
    assert cert.revalidate(T, seq)


def test_convergence_transfer_z():
    T = Tz(8)
    seq = seq_to_limit(T, 2, 4, start=2)
    shift = (1, 16)
    res = convergence_transfer(T, seq, shift, 3)
    assert res.verdict.status == PASS
    assert res.predicted_limit == (2, 4)
    assert res.certificate.revalidate(T, seq)
    shifted = [(p[0] + 1, p[1] + 16) for p in seq]
    assert res.shifted_certificate.revalidate(T, shifted)
    assert res.division_data.status == PASS


def test_convergence_transfer_odd_instance():
    T = Todd(8)
    seq = seq_to_limit(T, 1, 1, start=1)
    res = convergence_transfer(T, seq, (0, 3), 3,
                               shifted_limit=(1, 3))
    assert res.verdict.status == PASS
    assert res.predicted_limit == (1, 1)


def test_convergence_transfer_zplus_not_applicable():
    T = TopologyInstance("zplus", WeightSequence.double_exp(4))
    res = convergence_transfer(T, [(0, 4)], (0, 0), 2)
    assert res.verdict.status == NOT_APPLICABLE


# -- the two conditions on the weights ----------------------------------


def test_verify_star_double_exp():
    v = verify_star(WeightSequence.double_exp(6), max_multiplicity=2)
    assert v.status == PASS
    assert v.witness["multisets"] == 3 ** 6


def test_verify_star_negative_control():
    v = verify_star(WeightSequence.explicit([1, 2, 3]))
    assert v.status == FAIL
    assert v.witness["value"] == 3      # 1 + 2 = 3 collides


def test_verify_star_star_bases():
    assert verify_star_star(Tz(4), 5).witness["alpha_t"] == 1
    odd = verify_star_star(Todd(6), 9, s_window=1000)
    assert odd.status == PASS
    assert odd.witness["alpha_t"] == 2  # first weight above 3 is 5
    zp = TopologyInstance("zplus", WeightSequence.double_exp(4))
    assert verify_star_star(zp, 5).status == NOT_APPLICABLE


def test_verify_star_star_undetermined_when_bound_too_low():
    T = Todd(2)                          # weights 3, 5 only
    assert verify_star_star(T, 35).status == UNDETERMINED


# -- distinguishing masked topologies -----------------------------------


def test_distinguish_two_masks():
    w = WeightSequence.double_exp(8)
    v = distinguish_topologies(w, [1, 2, 3, 4], [1, 2, 7, 8], 8)
    assert v.status == DISTINCT
    sym = v.witness["symmetric_difference"]
    assert sorted(sym) == [3, 4, 7, 8]
    for rec in v.witness["witnesses"]:
        assert rec["point"] == (0, w.value(rec["index"]))


def test_mask_family_pairwise_symmetric_difference():
    masks = mask_family(8, 12, seed=5)
    assert len(masks) == 8
    floor = max(2, 12 // 3)
    for m1, m2 in combinations(masks, 2):
        assert len(set(m1) ^ set(m2)) >= floor


def test_mask_family_deterministic():
    assert mask_family(6, 10, seed=1) == mask_family(6, 10, seed=1)
    assert mask_family(6, 10, seed=1) != mask_family(6, 10, seed=2)


# -- convergent-subsequence correspondence ------------------------------


def test_good_corr_discrete():
    S = NatMul()
    found = good_corr_check(DiscreteTopology(S), 5, [2, 3, 2, 3, 2])
    assert found.status == FOUND
    assert found.witness["limit"] in (2, 3)
    vac = good_corr_check(DiscreteTopology(S), 5, [2, 4, 8, 16])
    assert vac.status == VACUOUS


def test_good_corr_one_point():
    S = NatInfinity()
    v = good_corr_check(OnePointTopology(S), 1, list(range(1, 8)))
    assert v.status == FOUND and v.witness["limit"] is INF


def test_good_corr_sigma_instance():
    T = Todd(8)
    seq = [(0, T.weights.value(j)) for j in range(1, 9)]
    v = good_corr_check(T, (0, 3), seq)
    assert v.status == FOUND
    assert v.witness["limit"] == (1, 1)
    sub = [seq[i - 1] for i in v.witness["term_indices"]]
    assert v.witness["certificate"].revalidate(T, sub)


# -- transport to (N, multiplication) ------------------------------------


def test_odd_pair_encoding_examples():
    assert odd_pair_to_natural((3, 5)) == 40
    assert natural_to_odd_pair(40) == (3, 5)
    with pytest.raises(TypeError):
        odd_pair_to_natural((1, 4))


@given(st.integers(0, 8), st.integers(0, 60), st.integers(0, 8),
       st.integers(0, 60))
def test_odd_pair_encoding_is_multiplicative(k1, n1, k2, n2):
    p1 = (k1, 2 * n1 + 1)
    p2 = (k2, 2 * n2 + 1)
    prod = (k1 + k2, p1[1] * p2[1])
    assert (odd_pair_to_natural(p1) * odd_pair_to_natural(p2)
            == odd_pair_to_natural(prod))
    assert natural_to_odd_pair(odd_pair_to_natural(p1)) == p1
