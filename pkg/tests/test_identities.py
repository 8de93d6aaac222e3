from lqlie.identities import (
    collapse_kl,
    collapse_kl_sides,
    collapse_mn,
    full_identity,
    full_identity_sides,
    identity_box,
    k_side_params,
    m_side_params,
)


def test_box_is_nonempty_and_bounded():
    cases = list(identity_box(3, 6, 4))
    assert cases
    for ks, ms, *_ in cases:
        assert len(ks) == len(ms) <= 3
        assert sum(ks) <= 6 and sum(ms) <= 4


def test_full_identity_holds_on_box():
    assert all(full_identity(*case) for case in identity_box(3, 6, 4))


def test_collapse_identities_hold_on_box():
    assert all(collapse_kl(*case) for case in k_side_params(3, 6))
    for d in range(1, 4):
        assert all(collapse_mn(*case) for case in m_side_params(d, 4))


def test_depth_one_values_by_hand():
    # d = 1 leaves a single summand: l_1 = k_1, n_1 = m_1
    assert full_identity_sides((2,), (1,), (), (), 1, 1, 0, 1) == (-1, -1)
    assert collapse_kl_sides((3,), (), 1, 2) == (-1, -1)


def test_a_shifted_parameter_breaks_the_identity():
    # lam + lam_bar must exhaust the weight; dropping one unit is caught
    lhs, rhs = full_identity_sides((2,), (0,), (), (), 1, 0, 0, 0)
    assert lhs != rhs
