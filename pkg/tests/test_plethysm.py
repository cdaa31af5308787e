import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bellsym.partitions import partitions_of, sort_parts, z_of
from bellsym.plethysm import PlethysmContext, omega, omega0, pleth, psi, z_shift
from bellsym.series import exp_series, series_compose
from bellsym.symfunc import SymFunc, ZTrunc, extract_basis, to_powersum

from _oracles import bivariate_cauchy_lhs

F = Fraction


def p_elem(lam, cap=6):
    return SymFunc.basis_element("powersum", lam, cap)


small_symfunc = st.builds(
    lambda pairs: SymFunc(
        "powersum",
        5,
        {sort_parts(parts): F(num, den) for parts, num, den in pairs},
    ),
    st.lists(
        st.tuples(
            st.lists(st.integers(1, 3), min_size=1, max_size=3),
            st.integers(-3, 3),
            st.integers(1, 3),
        ),
        max_size=3,
    ),
)


def drop_constant(G):
    terms = dict(G.terms)
    terms.pop((), None)
    return SymFunc("powersum", G.degree_cap, terms)


# -- pleth -------------------------------------------------------------------


def test_pleth_powersum_composition():
    ctx = PlethysmContext(6)
    assert pleth(p_elem((2,)), p_elem((3,)), ctx).terms == {(6,): F(1)}
    # p_n(p_m) = p_nm on a grid
    for n in range(1, 4):
        for m in range(1, 4):
            if n * m <= 6:
                got = pleth(p_elem((n,)), p_elem((m,)), ctx)
                assert got.terms == {(n * m,): F(1)}


def test_pleth_at_the_alphabet_is_identity():
    ctx = PlethysmContext(5)
    for lam in [(2,), (2, 1), (3, 1, 1)]:
        h = SymFunc.basis_element("homogeneous", lam, 5)
        assert pleth(h, p_elem((1,), 5), ctx) == to_powersum(h)


def test_pleth_of_sum_example():
    # h_2 evaluated at p_1 + p_2, graded slices
    G = SymFunc("powersum", 6, {(1,): 1, (2,): 1})
    h2 = SymFunc.basis_element("homogeneous", (2,), 6)
    result = pleth(h2, G, PlethysmContext(4))
    assert result.degree_part(4).terms == {(4,): F(1, 2), (2, 2): F(1, 2)}
    assert result.degree_part(3).terms == {(2, 1): F(1)}
    assert result.degree_part(2).terms == {(2,): F(1, 2), (1, 1): F(1, 2)}


def test_pleth_rejects_z_outer():
    zf = SymFunc("powersum", 3, {(1,): ZTrunc([1], 2)}, z_cap=2)
    with pytest.raises(ValueError):
        pleth(zf, p_elem((1,)), PlethysmContext(3))


@settings(max_examples=60, deadline=None)
@given(small_symfunc, small_symfunc, small_symfunc)
def test_pleth_is_algebra_morphism_in_outer_argument(F1, F2, G):
    G = drop_constant(G)
    ctx = PlethysmContext(5)
    lhs = pleth(F1 * F2, G, ctx)
    rhs = pleth(F1, G, ctx) * pleth(F2, G, ctx)
    assert lhs == rhs
    lhs2 = pleth(F1 + F2, G, ctx)
    rhs2 = pleth(F1, G, ctx) + pleth(F2, G, ctx)
    assert lhs2 == rhs2


def test_pleth_linear_in_outer_scalars():
    ctx = PlethysmContext(5)
    G = SymFunc("powersum", 5, {(1,): F(1, 2), (2, 1): 1})
    Fa = SymFunc("powersum", 5, {(2,): F(2, 3)})
    assert pleth(Fa.scale(3), G, ctx) == pleth(Fa, G, ctx).scale(3)


# -- omega -------------------------------------------------------------------


def test_omega_of_alphabet_is_h_sum():
    om = omega(p_elem((1,), 3), PlethysmContext(3))
    expected: dict = {}
    for n in range(4):
        for lam in partitions_of(n):
            expected[lam] = F(1, z_of(lam))
    assert om.terms == expected


def test_omega_of_omega0_degree3_schur():
    ctx = PlethysmContext(3)
    inner = omega0(p_elem((1,), 3), ctx)
    full = omega(inner, ctx)
    schur = extract_basis(full.degree_part(3), "schur")
    assert schur.terms == {(2, 1): F(1), (3,): F(3)}


def test_omega_rejects_rational_constant():
    bad = SymFunc("powersum", 3, {(): 1, (1,): 1})
    with pytest.raises(ValueError):
        omega(bad, PlethysmContext(3))


def test_omega_allows_pure_z_constant():
    ctx = PlethysmContext(2, 3)
    om = omega(p_elem((1,), 2), PlethysmContext(2))
    shifted = z_shift(om, 1, 3)
    result = omega(shifted, ctx)
    assert result.terms[()] == ZTrunc([1, 1, 1, 1], 3)  # 1/(1-z) truncated


@settings(max_examples=40, deadline=None)
@given(small_symfunc, small_symfunc)
def test_omega_additivity(A, B):
    A, B = drop_constant(A), drop_constant(B)
    ctx = PlethysmContext(5)
    assert omega(A + B, ctx) == omega(A, ctx) * omega(B, ctx)


def test_omega_additivity_disjoint_generators():
    # two disjoint alphabet copies, encoded on disjoint p-generators
    ctx = PlethysmContext(4)
    A = SymFunc("powersum", 4, {(1,): 1})          # lives on p_1
    B = SymFunc("powersum", 4, {(3,): F(1, 3)})    # lives on p_3
    assert omega(A + B, ctx) == omega(A, ctx) * omega(B, ctx)


def test_omega_cauchy_identity():
    # exp(sum p_n(X)p_n(Y)/n) = sum_lam p_lam(X)p_lam(Y)/z_lam, degreewise
    cap = 4
    lhs = bivariate_cauchy_lhs(cap)
    expected = {}
    for n in range(cap + 1):
        for lam in partitions_of(n):
            expected[(lam, lam)] = F(1, z_of(lam))
    assert lhs == expected


def test_omega0_drops_unit():
    ctx = PlethysmContext(3)
    om0 = omega0(p_elem((1,), 3), ctx)
    assert () not in om0.terms
    assert om0.terms[(1,)] == F(1)


# -- psi ---------------------------------------------------------------------


def test_psi_kills_higher_powersums():
    assert psi(p_elem((2,), 4)) == [F(0)] * 5
    mixed = SymFunc("powersum", 3, {(2, 1): 5, (1, 1): F(1, 3)})
    assert psi(mixed) == [F(0), F(0), F(1, 3), F(0)]


def test_psi_of_omega_is_exponential():
    om = omega(p_elem((1,), 4), PlethysmContext(4))
    assert psi(om) == exp_series(4)


def test_psi_composition_law():
    # psi(F(G)) = psi(F) composed with psi(G), as univariate series
    rng = random.Random(7)
    cap = 6
    ctx = PlethysmContext(cap)
    for _ in range(10):
        fterms = {
            sort_parts([rng.randint(1, 3) for _ in range(rng.randint(1, 3))]): F(
                rng.randint(-3, 3), rng.randint(1, 3)
            )
            for _ in range(rng.randint(1, 3))
        }
        gterms = {
            sort_parts([rng.randint(1, 3) for _ in range(rng.randint(1, 3))]): F(
                rng.randint(-3, 3), rng.randint(1, 3)
            )
            for _ in range(rng.randint(1, 3))
        }
        Ff = SymFunc("powersum", cap, fterms)
        Gg = SymFunc("powersum", cap, gterms)
        lhs = psi(pleth(Ff, Gg, ctx))
        # outer series needs padding: psi(F) has length cap+1 already
        rhs = series_compose(psi(Ff), psi(Gg))
        assert lhs[: len(rhs)] == rhs


def test_z_shift():
    G = SymFunc("powersum", 3, {(1,): F(2), (): F(1)})
    shifted = z_shift(G, 2, 5)
    assert shifted.terms[(1,)] == ZTrunc([0, 0, 2], 5)
    assert shifted.terms[()] == ZTrunc([0, 0, 1], 5)
    with pytest.raises(ValueError):
        z_shift(shifted, 1, 5)
