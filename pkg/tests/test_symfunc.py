import json
from fractions import Fraction

import pytest

from bellsym.partitions import partitions_of, z_of
from bellsym.symfunc import (
    BASES,
    CharacterTable,
    SymFunc,
    ZTrunc,
    char_value,
    character_table,
    convert,
    extract_basis,
    h_lambda_in_powersum,
    hall_inner,
    inverse_kostka,
    kostka_matrix,
    kostka_number,
    to_powersum,
)

from _oracles import inverse_kostka_rimhook, ssyt_count

F = Fraction


# -- ZTrunc ------------------------------------------------------------------


def test_ztrunc_arithmetic():
    a = ZTrunc([1, 2], 3)
    b = ZTrunc([0, 1, 1], 3)
    assert (a + b).coeffs == (F(1), F(3), F(1))
    assert (a * b).coeffs == (F(0), F(1), F(3), F(2))
    assert (a * ZTrunc.monomial(3, 3)).coeffs == (F(0), F(0), F(0), F(1))
    assert not ZTrunc([], 3)
    assert ZTrunc([0, 0, 0, 0, 7], 3).coeffs == ()  # truncated away


def test_ztrunc_substitute_power():
    a = ZTrunc([0, 1, 1], 6)  # z + z^2
    assert a.substitute_power(2).coeffs == (F(0), F(0), F(1), F(0), F(1))
    assert a.substitute_power(5).coeffs == (F(0), F(0), F(0), F(0), F(0), F(1))


# -- SymFunc basics ----------------------------------------------------------


def test_symfunc_normalization():
    F1 = SymFunc("powersum", 3, {(2, 1): 0, (1,): 2, (5,): 9})
    assert F1.terms == {(1,): F(2)}  # zero dropped, over-cap dropped


def test_basis_mismatch_rejected():
    a = SymFunc.basis_element("powersum", (1,), 3)
    b = SymFunc.basis_element("schur", (1,), 3)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        SymFunc.basis_element("monomial", (1,), 3) * SymFunc.basis_element("monomial", (1,), 3)


def test_multiplication_caps_resolve_to_min():
    a = SymFunc("powersum", 5, {(2,): 1, (1,): 1})
    b = SymFunc("powersum", 3, {(2,): 1})
    prod = a * b
    assert prod.degree_cap == 3
    assert prod.terms == {(2, 1): F(1)}  # (2,2) exceeds the min cap


# -- character values --------------------------------------------------------


def test_character_examples():
    assert char_value((1, 1), (2,)) == -1
    assert char_value((2,), (2,)) == 1
    assert char_value((2, 1), (1, 1, 1)) == 2
    assert char_value((5,), (3, 2)) == 1  # trivial character
    assert char_value((1, 1, 1, 1), (2, 1, 1)) == -1  # sign character


def test_character_table_row_orthogonality():
    for n in range(1, 9):
        table = character_table(n)
        parts = partitions_of(n)
        for l1 in parts:
            for l2 in parts:
                total = sum(
                    F(table.chi(l1, mu) * table.chi(l2, mu), z_of(mu)) for mu in parts
                )
                assert total == (1 if l1 == l2 else 0)


def test_characters_match_kostka_reconstruction():
    # independent route: s_lam over h via inverse Kostka (SSYT counting),
    # then h into powersums via the exponential formula
    for n in range(1, 7):
        inv = inverse_kostka(n)
        for lam in partitions_of(n):
            p_expansion: dict = {}
            for mu in partitions_of(n):
                c = inv[(lam, mu)]
                if not c:
                    continue
                for nu, w in h_lambda_in_powersum(mu).items():
                    p_expansion[nu] = p_expansion.get(nu, F(0)) + c * w
            for nu in partitions_of(n):
                expect = p_expansion.get(nu, F(0)) * z_of(nu)
                assert expect == char_value(lam, nu), (lam, nu)


# -- Kostka ------------------------------------------------------------------


def test_kostka_examples():
    assert kostka_matrix(1) == {((1,), (1,)): 1}
    assert inverse_kostka(1)[((1,), (1,))] == 1
    assert kostka_number((2,), (1, 1)) == 1
    assert kostka_number((1, 1), (2,)) == 0
    row = {mu: inverse_kostka(3)[((2, 1), mu)] for mu in partitions_of(3)}
    assert row == {(3,): -1, (2, 1): 1, (1, 1, 1): 0}  # s_21 = h_21 - h_3


def test_kostka_against_ssyt_bruteforce():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert kostka_number(lam, mu) == ssyt_count(lam, mu), (lam, mu)


def test_kostka_inverse_identity():
    for n in range(7):
        K = kostka_matrix(n)
        inv = inverse_kostka(n)
        parts = partitions_of(n)
        for lam in parts:
            for kappa in parts:
                total = sum(inv[(lam, nu)] * K[(kappa, nu)] for nu in parts)
                assert total == (1 if lam == kappa else 0)


def test_inverse_kostka_against_rimhook_rule():
    for n in range(1, 6):
        inv = inverse_kostka(n)
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert inv[(lam, mu)] == inverse_kostka_rimhook(lam, mu), (lam, mu)


# -- conversions -------------------------------------------------------------


def test_to_powersum_examples():
    h1 = SymFunc.basis_element("homogeneous", (1,), 4)
    assert to_powersum(h1).terms == {(1,): F(1)}
    h2 = SymFunc.basis_element("homogeneous", (2,), 4)
    assert to_powersum(h2).terms == {(2,): F(1, 2), (1, 1): F(1, 2)}
    s11 = SymFunc.basis_element("schur", (1, 1), 4)
    assert to_powersum(s11).terms == {(2,): F(-1, 2), (1, 1): F(1, 2)}


def test_extract_basis_examples():
    p1 = SymFunc.basis_element("powersum", (1,), 2)
    assert extract_basis(p1, "monomial").terms == {(1,): F(1)}


def test_round_trips_all_basis_pairs():
    # converting any degree <= 6 basis element b1 -> b2 -> b1 is the identity
    for b1 in BASES:
        for b2 in BASES:
            for n in range(7):
                for lam in partitions_of(n):
                    start = SymFunc.basis_element(b1, lam, 6)
                    back = convert(convert(start, b2), b1)
                    assert back == start, (b1, b2, lam)


def test_round_trip_mixed_function():
    mixed = SymFunc("schur", 5, {(3, 1): F(2), (2,): F(-1, 3), (): F(4)})
    for b2 in BASES:
        assert convert(convert(mixed, b2), "schur") == mixed


def test_hall_duality_pairs():
    # <m_lam, h_mu> = delta and <s_lam, s_mu> = delta for n <= 7
    for n in range(8):
        parts = partitions_of(n)
        m_elems = {lam: SymFunc.basis_element("monomial", lam, n) for lam in parts}
        h_elems = {lam: SymFunc.basis_element("homogeneous", lam, n) for lam in parts}
        s_elems = {lam: SymFunc.basis_element("schur", lam, n) for lam in parts}
        for lam in parts:
            for mu in parts:
                assert hall_inner(m_elems[lam], h_elems[mu]) == (1 if lam == mu else 0)
                assert hall_inner(s_elems[lam], s_elems[mu]) == (1 if lam == mu else 0)


def test_hall_examples():
    p11 = SymFunc.basis_element("powersum", (1, 1), 3)
    assert hall_inner(p11, p11) == 2
    s2 = SymFunc.basis_element("schur", (2,), 3)
    s11 = SymFunc.basis_element("schur", (1, 1), 3)
    assert hall_inner(s2, s11) == 0


def test_hall_with_ztrunc_coefficients():
    zf = SymFunc("powersum", 3, {(1,): ZTrunc([0, 1], 4)}, z_cap=4)
    p1 = SymFunc.basis_element("powersum", (1,), 3)
    paired = hall_inner(p1, zf)
    assert isinstance(paired, ZTrunc)
    assert paired.coeffs == (F(0), F(1))


# -- JSON --------------------------------------------------------------------


def test_json_round_trip():
    G = SymFunc("monomial", 4, {(3, 1): F(5, 6), (1,): F(-2)})
    data = G.to_json_dict()
    assert data["terms"][0] == {"partition": "1", "coeff": "-2"}
    assert data["terms"][1] == {"partition": "3,1", "coeff": "5/6"}
    again = SymFunc.from_json_dict(json.loads(json.dumps(data)))
    assert again == G
    assert again.degree_cap == 4


def test_json_rejects_z_domain():
    zf = SymFunc("powersum", 3, {(1,): ZTrunc([0, 1], 4)}, z_cap=4)
    with pytest.raises(ValueError):
        zf.to_json_dict()


def test_character_table_type():
    table = character_table(3)
    assert isinstance(table, CharacterTable)
    assert table.n == 3
    assert table.chi((2, 1), (3,)) == -1
