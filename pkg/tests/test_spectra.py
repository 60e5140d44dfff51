"""Exact polynomials, spectra and line systems."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equilines import (SeidelGraph, apply_switching, char_poly, chi_from_char,
                       chi_polynomial, embed_lines, parse_eigenvalue,
                       pentagon, spectrum, two_eigenvalue_check)
from equilines.spectra import (bareiss_det, poly_divexact, poly_mul, poly_neg,
                               poly_pow)

from conftest import random_graph


def expand(*factors):
    out = [1]
    for f, k in factors:
        out = poly_mul(out, poly_pow(f, k))
    return out


def test_poly_helpers():
    assert poly_mul([1, 1], [-1, 1]) == [-1, 0, 1]
    assert poly_divexact([-1, 0, 1], [1, 1]) == [-1, 1]
    with pytest.raises(ArithmeticError):
        poly_divexact([1, 0, 1], [1, 1])
    assert poly_pow([0, 1], 3) == [0, 0, 0, 1]


def test_bareiss_against_numpy(rng):
    for _ in range(40):
        n = rng.randint(1, 6)
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        det = bareiss_det([[[e] for e in row] for row in m])
        value = det[0] if det else 0
        assert value == round(np.linalg.det(np.array(m, dtype=float)))


def test_char_poly_small_cases():
    k2 = SeidelGraph(2, [(0, 1)])
    assert list(char_poly(k2)) == [0, -2, 1]            # x^2 - 2x
    empty3 = SeidelGraph(3)
    assert list(char_poly(empty3)) == [0, 0, -3, 1]     # x^2 (x - 3)
    one = SeidelGraph(1)
    assert list(char_poly(one)) == [-1, 1]


def test_char_poly_pentagon_extension(extensions):
    assert list(char_poly(extensions[6])) == expand(([-4, -2, 1], 3))


@given(st.integers(2, 6), st.integers(0, 2 ** 15 - 1))
@settings(max_examples=40)
def test_char_poly_matches_numpy_roots(n, bits):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    g = SeidelGraph(n, [p for k, p in enumerate(pairs[: n * (n - 1) // 2])
                        if (bits >> k) & 1])
    coeffs = list(char_poly(g))
    eigs = np.linalg.eigvalsh(np.array(g.seidel_matrix(), dtype=float))
    # evaluate the exact polynomial at the numeric eigenvalues
    for lam in eigs:
        value = sum(c * lam ** k for k, c in enumerate(coeffs))
        assert abs(value) < 1e-6 * max(1.0, abs(lam)) ** g.n


def test_chi_polynomials_match_frozen_factorizations(extensions):
    assert list(chi_polynomial(extensions[4])) == poly_neg(
        expand(([-1, 3], 1), ([1, 1], 3)))
    assert list(chi_polynomial(extensions[6])) == poly_neg(
        expand(([-1, 0, 5], 3)))
    assert list(chi_polynomial(extensions[16])) == expand(
        ([1, 5], 6), ([-1, 3], 10))
    assert list(chi_polynomial(extensions[28])) == poly_neg(
        expand(([1, 9], 7), ([-1, 3], 21)))


def test_chi_paley_factorizations(paley_extensions):
    for q, ext in paley_extensions.items():
        got = list(chi_polynomial(ext))
        base = expand(([-1, 0, q], (q + 1) // 2))
        assert got in (base, poly_neg(base))
        assert got[0] == 1   # value at c=0 is det of the identity


@given(st.integers(1, 5), st.integers(0, 2 ** 10 - 1))
@settings(max_examples=40)
def test_chi_substitution_identity(n, bits):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    g = SeidelGraph(n, [p for k, p in enumerate(pairs)
                        if k < len(pairs) and (bits >> k) & 1])
    assert chi_polynomial(g) == chi_from_char(g)


def test_chi_substitution_identity_large(extensions):
    for g in extensions.values():
        assert chi_polynomial(g) == chi_from_char(g)


def test_spectrum_exact_values(extensions, paley_extensions):
    sp6 = spectrum(extensions[6])
    assert [(ev.label(), ev.multiplicity) for ev in sp6.eigenvalues] == \
        [("1+sqrt(5)", 3), ("1-sqrt(5)", 3)]
    sp28 = spectrum(extensions[28])
    assert [(ev.label(), ev.multiplicity) for ev in sp28.eigenvalues] == \
        [("10", 7), ("-2", 21)]
    for q, ext in paley_extensions.items():
        sp = spectrum(ext)
        root = math.isqrt(q)
        if root * root == q:   # 1 +/- sqrt(q) are plain integers
            want = [(str(1 + root), (q + 1) // 2), (str(1 - root), (q + 1) // 2)]
        else:
            want = [(f"1+sqrt({q})", (q + 1) // 2), (f"1-sqrt({q})", (q + 1) // 2)]
        assert [(ev.label(), ev.multiplicity) for ev in sp.eigenvalues] == want
    k2 = SeidelGraph(2, [(0, 1)])
    assert [(ev.label(), ev.multiplicity) for ev in spectrum(k2).eigenvalues] == \
        [("2", 1), ("0", 1)]


def test_spectrum_interval_fallback():
    p4 = SeidelGraph(4, [(0, 1), (1, 2), (2, 3)])
    sp = spectrum(p4)
    assert not sp.is_exact
    assert sp.distinct_count() == 4
    # interval values really enclose 1 +/- sqrt(5)
    approxes = sorted(ev.approx for ev in sp.eigenvalues)
    assert abs(approxes[0] - (1 - math.sqrt(5))) < 1e-9
    assert abs(approxes[-1] - (1 + math.sqrt(5))) < 1e-9


def test_spectrum_switching_invariance(rng):
    for _ in range(15):
        n = rng.randint(2, 6)
        g = random_graph(rng, n)
        nu = tuple(rng.choice((-1, 1)) for _ in range(n))
        assert spectrum(apply_switching(g, nu)).to_json_dict() == \
            spectrum(g).to_json_dict()


def test_spectrum_moments(rng):
    # the constructor enforces the identities; just touch many graphs
    for _ in range(25):
        spectrum(random_graph(rng, rng.randint(2, 8)))


def test_two_eigenvalue_check(extensions):
    for ext in extensions.values():
        assert two_eigenvalue_check(ext)
    assert two_eigenvalue_check(SeidelGraph(2, [(0, 1)]))
    p4 = SeidelGraph(4, [(0, 1), (1, 2), (2, 3)])
    assert not two_eigenvalue_check(p4)


def test_doubly_transitive_implies_two_eigenvalues(extensions, paley_extensions,
                                                   two_graph_groups):
    for n, grp in two_graph_groups.items():
        assert grp.is_doubly_transitive()
        assert two_eigenvalue_check(extensions[n])
    for ext in paley_extensions.values():
        assert two_eigenvalue_check(ext)


def test_parse_eigenvalue():
    assert parse_eigenvalue("-2").rational == Fraction(-2)
    assert parse_eigenvalue("3/2").rational == Fraction(3, 2)
    assert parse_eigenvalue("1+sqrt(5)").quad == (1, 1, 5)
    assert parse_eigenvalue("1 - sqrt(13)").quad == (1, -1, 13)
    with pytest.raises(ValueError):
        parse_eigenvalue("sqrt")


def check_line_system(ls, g, want_dim, want_cos):
    assert ls.dim == want_dim
    assert ls.residual <= 1e-9
    vecs = [np.array(v) for v in ls.vectors]
    for v in vecs:
        assert abs(np.dot(v, v) - 1) <= 1e-9
    for i in range(g.n):
        for j in range(i + 1, g.n):
            inner = float(np.dot(vecs[i], vecs[j]))
            assert abs(abs(inner) - want_cos) <= 1e-9
            # sign pattern is the matrix entry times the recorded sign
            assert math.copysign(1, inner) == \
                g.seidel_entry(i, j) * ls.sign


def test_line_systems(extensions, paley_extensions):
    check_line_system(embed_lines(extensions[6], "1-sqrt(5)"),
                      extensions[6], 3, 1 / math.sqrt(5))
    check_line_system(embed_lines(extensions[16], "-2"),
                      extensions[16], 6, 1 / 3)
    check_line_system(embed_lines(extensions[28], "-2"),
                      extensions[28], 7, 1 / 3)
    check_line_system(embed_lines(extensions[28], "10"),
                      extensions[28], 21, 1 / 9)
    check_line_system(embed_lines(paley_extensions[13], "1-sqrt(13)"),
                      paley_extensions[13], 7, 1 / math.sqrt(13))


def test_line_system_errors(extensions):
    with pytest.raises(ValueError):
        embed_lines(extensions[6], "7")            # not an eigenvalue
    with pytest.raises(ValueError):
        embed_lines(extensions[6], "1+sqrt(7)")
    g = SeidelGraph(4, [(0, 1), (1, 2), (2, 3)])   # 4 distinct eigenvalues
    sp = spectrum(g)
    inner = sorted(sp.eigenvalues, key=lambda ev: ev.approx)[1]
    with pytest.raises(ValueError):
        embed_lines(g, "2" if inner.label() == "2" else inner.label())


def test_line_system_json(extensions):
    d = embed_lines(extensions[16], "-2").to_json_dict()
    assert d["n"] == 16 and d["dim"] == 6 and d["cos"] == "1/3"
    assert len(d["vectors"]) == 16 and len(d["vectors"][0]) == 6
    assert d["gram_exact"][0][0] == "1"
    assert set(d["gram_exact"][0][1:]) <= {"1/3", "-1/3"}
    assert d["residual"] <= 1e-9


def test_gram_exact_entries_match_matrix(extensions):
    g = extensions[16]
    ls = embed_lines(g, "-2")
    for i in range(g.n):
        for j in range(g.n):
            want = Fraction(1) if i == j else Fraction(g.seidel_entry(i, j), 3)
            assert Fraction(ls.gram_exact[i][j]) == want
