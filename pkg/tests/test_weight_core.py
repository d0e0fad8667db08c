# tests/test_weight_core.py
import pytest
from hypothesis import given, strategies as st

from ampleness.errors import InputError
from ampleness.weight_core import (
    BlockDescriptor,
    KRootData,
    RootFamily,
    SignedPermutation,
    Weight,
    apply_inverse,
    classical_roots,
    is_dominant,
    is_positive_restricted,
    pair,
    reflect,
    simple_coordinates,
    weight_index,
    weight_index_bfs,
    weyl_orbit,
)

A, B, C, D = RootFamily.A, RootFamily.B, RootFamily.C, RootFamily.D


def e(rank, **terms):
    """e(7, e1=1, e4=1) -> ε₁+ε₄"""
    return Weight.from_terms(rank, {int(k[1:]): v for k, v in terms.items()})


def k_data(rank, *blocks):
    return KRootData(rank, tuple(BlockDescriptor(f, a, b) for f, a, b in blocks))


# ---------- Weights ----------
def test_weight_str_and_arithmetic():
    assert str(e(4, e1=1, e4=1)) == "ε₁+ε₄"
    assert str(e(2, e2=-2)) == "−2ε₂"
    assert str(Weight.zero(3)) == "0"
    assert e(3, e1=1) + e(3, e2=1) - e(3, e1=1) == e(3, e2=1)
    assert -e(2, e1=1) == e(2, e1=-1)


def test_weight_rejects_rank_mismatch_and_bad_index():
    with pytest.raises(InputError):
        pair(Weight.zero(2), Weight.zero(3))
    with pytest.raises(InputError):
        Weight.basis(3, 4)


@pytest.mark.parametrize("u,v,expected", [
    (e(5, e1=1, e5=-1), e(5, e1=1, e2=-1), 1),
    (e(3, e3=2), e(3, e3=1), 2),
    (e(4, e2=1, e4=1), e(4, e2=1, e4=-1), 0),
])
def test_pair(u, v, expected):
    assert pair(u, v) == expected


def test_reflect():
    assert reflect(e(2, e1=2), e(2, e1=1, e2=-1)) == e(2, e2=2)
    assert reflect(e(3, e1=1, e3=1), e(3, e3=1)) == e(3, e1=1, e3=-1)
    lam = e(4, e1=1, e2=1)
    assert reflect(lam, e(4, e3=1, e4=-1)) == lam
    with pytest.raises(InputError):
        reflect(lam, Weight.zero(4))


# ---------- Root data ----------
@pytest.mark.parametrize("family,length,count", [(A, 4, 6), (B, 3, 9), (C, 3, 9), (D, 4, 12), (D, 1, 0)])
def test_block_root_counts(family, length, count):
    k = k_data(length, (family, 1, length))
    assert k.dimension == count
    assert set(k.simple_roots) <= set(k.positive_roots)
    assert all(is_positive_restricted(r) for r in k.positive_roots)


@pytest.mark.parametrize("family,length,positives,simples", [
    (A, 1, (), ()),
    (A, 2, ((1, -1),), ((1, -1),)),
    (B, 1, ((1,),), ((1,),)),
    (C, 1, ((2,),), ((2,),)),
    (D, 1, (), ()),
    (D, 2, ((1, -1), (1, 1)), ((1, -1), (1, 1))),
    (C, 2, ((1, -1), (1, 1), (2, 0), (0, 2)), ((1, -1), (0, 2))),
])
def test_classical_roots_at_small_rank(family, length, positives, simples):
    found_positives, found_simples = classical_roots(family, length)
    assert set(found_positives) == set(positives)
    assert set(found_simples) == set(simples)


@pytest.mark.parametrize("family,count", [(A, lambda n: n * (n - 1) // 2), (B, lambda n: n * n),
                                          (C, lambda n: n * n), (D, lambda n: n * (n - 1))])
def test_classical_roots_have_one_simple_root_per_rank(family, count):
    for length in range(1, 9):
        positives, simples = classical_roots(family, length)
        assert len(positives) == count(length)
        expected = {A: length - 1, B: length, C: length, D: length if length > 1 else 0}[family]
        assert len(simples) == expected


def test_block_roots_are_shifted_onto_the_span():
    k = k_data(5, (A, 1, 2), (C, 3, 5))
    assert e(5, e1=1, e2=-1) in k.simple_roots
    assert e(5, e5=2) in k.simple_roots
    assert e(5, e3=1, e4=1) in k.positive_roots
    assert k.dimension == 1 + 9


def test_overlapping_blocks_rejected():
    with pytest.raises(InputError):
        k_data(4, (A, 1, 3), (A, 3, 4))


# ---------- Orbits ----------
def test_orbit_of_2e1_under_a3():
    k = k_data(4, (A, 1, 4))
    assert weyl_orbit(e(4, e1=2), k.simple_roots) == {Weight.basis(4, i, 2) for i in range(1, 5)}


def test_orbit_of_e1_plus_e3_under_d2_times_b2():
    k = k_data(4, (D, 1, 2), (B, 3, 4))
    orbit = weyl_orbit(e(4, e1=1, e3=1), k.simple_roots)
    expected = {Weight.from_terms(4, {a: sa, b: sb}) for a in (1, 2) for b in (3, 4) for sa in (1, -1) for sb in (1, -1)}
    assert orbit == expected


def test_orbit_for_su_3_4():
    k = k_data(7, (A, 1, 3), (A, 4, 7))
    orbit = weyl_orbit(e(7, e1=1, e7=-1), k.simple_roots)
    assert len(orbit) == 12
    assert orbit == {Weight.from_terms(7, {a: 1, b: -1}) for a in range(1, 4) for b in range(4, 8)}


def test_orbit_independent_of_reflection_order():
    k = k_data(6, (B, 1, 3), (B, 4, 6))
    lam = e(6, e1=1, e4=1)
    assert weyl_orbit(lam, k.simple_roots) == weyl_orbit(lam, tuple(reversed(k.simple_roots)))


# ---------- Dominance and index ----------
def test_dominance_examples():
    k = k_data(7, (B, 1, 3), (B, 4, 7))
    lam = e(7, e1=1, e4=1)
    assert is_dominant(lam, k)
    assert not is_dominant(-lam, k)
    assert is_dominant(Weight.zero(7), k)


def test_index_su():
    k = k_data(7, (A, 1, 3), (A, 4, 7))
    assert weight_index(e(7, e2=-1, e5=1), k) == 2


def test_index_so_odd_odd_and_so_even_odd():
    k_odd = k_data(7, (B, 1, 3), (B, 4, 7))
    assert weight_index(e(7, e3=1, e4=-1), k_odd) == 9
    k_even = k_data(7, (D, 1, 3), (B, 4, 7))
    assert weight_index(e(7, e3=-1, e4=1), k_even) == 2


def test_index_bfs_on_b_r():
    k = k_data(3, (B, 1, 3))
    assert weight_index_bfs(e(3, e3=-2), k) == 3
    assert weight_index_bfs(e(3, e1=2), k) == 0


def test_index_matches_descent_over_orbits():
    k = k_data(6, (D, 1, 3), (B, 4, 6))
    for mu in weyl_orbit(e(6, e1=1, e4=1), k.simple_roots):
        for weight in (mu, -mu):
            assert weight_index(weight, k) == weight_index_bfs(weight, k)


# ---------- Positivity and signed permutations ----------
def test_positive_restricted():
    assert is_positive_restricted(e(7, e2=1, e7=1))
    assert not is_positive_restricted(e(7, e2=-1, e7=1))
    assert is_positive_restricted(e(5, e5=2))
    assert not is_positive_restricted(e(3, e1=-1, e3=-1))
    with pytest.raises(InputError):
        is_positive_restricted(Weight.zero(2))


def test_apply_inverse():
    w = SignedPermutation((2, 5, 6, 1, 3, 4, 7), (1,) * 7)
    assert apply_inverse(w, e(7, e1=1, e4=1)) == e(7, e1=1, e2=1)
    mu = e(4, e2=3, e3=-1)
    assert apply_inverse(SignedPermutation.identity(4), mu) == mu
    flip = SignedPermutation((1, 2, 3, 4), (1, 1, 1, -1))
    assert apply_inverse(flip, e(4, e4=2)) == e(4, e4=-2)


def test_signed_permutation_validation():
    with pytest.raises(InputError):
        SignedPermutation((1, 1, 3), (1, 1, 1))
    with pytest.raises(InputError):
        SignedPermutation((1, 2), (1, 2))


# ---------- Simple coordinates ----------
def test_simple_coordinates():
    assert simple_coordinates(e(3, e1=1, e2=-1), C, 3) == (1, 0, 0)
    assert simple_coordinates(e(3, e3=2), C, 3) == (0, 0, 1)
    assert simple_coordinates(e(3, e1=1, e2=1), D, 3) == (1, 1, 1)
    assert simple_coordinates(e(2, e1=1), B, 2) == (1, 1)
    assert simple_coordinates(e(1, e1=1), B, 1) == (1,)
    assert simple_coordinates(e(4, e1=1, e4=-1), D, 4) == (1, 1, 1, 0)
    with pytest.raises(InputError):
        simple_coordinates(e(3, e1=1), D, 3)
    with pytest.raises(InputError):
        simple_coordinates(e(2, e1=1), C, 2)


# ---------- Properties ----------
coords = st.lists(st.integers(min_value=-3, max_value=3), min_size=4, max_size=4)
roots_b2b2 = k_data(4, (B, 1, 2), (B, 3, 4))
roots_c4 = k_data(4, (C, 1, 4))


@given(coords, st.sampled_from(roots_b2b2.positive_roots + roots_c4.positive_roots))
def test_reflection_is_an_involution(values, beta):
    v = Weight(tuple(values))
    assert reflect(reflect(v, beta), beta) == v


@given(coords, st.sampled_from([roots_b2b2, roots_c4, k_data(4, (A, 1, 2), (D, 3, 4))]))
def test_dominant_iff_index_zero(values, k):
    lam = Weight(tuple(values))
    assert is_dominant(lam, k) == (weight_index(lam, k) == 0)
    assert weight_index(lam, k) == weight_index_bfs(lam, k)


@given(coords.filter(any))
def test_exactly_one_of_mu_and_minus_mu_is_positive(values):
    mu = Weight(tuple(values))
    assert is_positive_restricted(mu) != is_positive_restricted(-mu)


@given(st.permutations(range(1, 6)), st.lists(st.sampled_from([1, -1]), min_size=5, max_size=5),
       st.lists(st.integers(min_value=-4, max_value=4), min_size=5, max_size=5))
def test_signed_permutation_round_trip(perm, signs, values):
    w = SignedPermutation(tuple(perm), tuple(signs))
    mu = Weight(tuple(values))
    assert w.apply(w.apply_inverse(mu)) == mu
    assert w.inverse().apply_inverse(mu) == w.apply(mu)
