import pytest

from homcert.certificate import (
    build_A,
    build_B,
    build_K,
    certificate_vertices,
    check_lemma,
    check_theorem,
    odd_cycle_complex,
    pullback_dual_cochain,
    w1_power_representative,
)
from homcert.cochains import involution_image, quotient_map_q
from homcert.errors import InvalidArgumentError, UnsupportedParametersError
from oracles import brute_cells, brute_dim, complete_edges, cycle_edges

SMALL = [(1, 3), (1, 4), (2, 3), (2, 4), (3, 3), (3, 4), (4, 3), (2, 5)]


@pytest.mark.parametrize(
    "r, t, vertices",
    [(1, 1, (2,)), (2, 1, (1,)), (3, 2, (4, 6)), (4, 2, (3, 1))],
)
def test_schedule_examples(r, t, vertices):
    s = certificate_vertices(r)
    assert (s.t, s.vertices) == (t, vertices)


@pytest.mark.parametrize("r", range(1, 21))
def test_schedule_telescopes(r):
    s = certificate_vertices(r)
    assert s.endpoint_parity() == {0, r}
    assert all(0 <= v <= 2 * r for v in s.vertices)


def test_schedule_rejects_zero():
    with pytest.raises(InvalidArgumentError):
        certificate_vertices(0)


def test_unsupported_n():
    with pytest.raises(UnsupportedParametersError):
        build_A(0, 2, 2)
    with pytest.raises(UnsupportedParametersError):
        build_B(0, 1, 2)


def _brute_A_B(r, n):
    m = 2 * r + 1
    cells = brute_cells(m, cycle_edges(m), n, complete_edges(n))
    top = frozenset(range(n - 1))
    A = {v: sum(brute_dim(x) == n - 2 and x[v] == top for x in cells) for v in range(m)}
    B = {v: sum(brute_dim(x) == n - 3 and x[(v - 1) % m] | x[(v + 1) % m] == top for x in cells) for v in range(m)}
    return A, B


def test_frozen_sizes_match_brute_force():
    A, B = _brute_A_B(2, 3)
    assert A[2] == 2
    A, B = _brute_A_B(2, 4)
    assert set(A.values()) == {6} and B[1] == 30
    A, B = _brute_A_B(1, 3)
    assert B[2] == 2


def test_sizes():
    assert len(build_A(2, 2, 3)) == 2
    assert all(len(build_A(v, 2, 4)) == 6 for v in range(5))
    assert len(build_B(2, 1, 3)) == 2
    assert len(build_B(1, 2, 4)) == 30


@pytest.mark.parametrize("r, n", SMALL)
def test_direct_and_filter_paths_agree(r, n):
    for v in range(2 * r + 1):
        assert build_A(v, r, n) == build_A(v, r, n, method="filter")
        assert build_B(v, r, n) == build_B(v, r, n, method="filter")
    assert pullback_dual_cochain(r, n) == pullback_dual_cochain(r, n, method="filter")


@pytest.mark.parametrize("r, n", SMALL)
def test_forced_entries(r, n):
    m = 2 * r + 1
    last = 1 << (n - 1)
    for v in range(m):
        for x in build_A(v, r, n):
            assert x[(v - 1) % m] == x[(v + 1) % m] == last
            assert all(x[w].bit_count() == 1 for w in range(m) if w != v)
        for x in build_B(v, r, n):
            assert x[v] == last
            assert x[(v - 1) % m] & x[(v + 1) % m] == 0


@pytest.mark.parametrize("r, n", SMALL)
def test_lemma_all_vertices(r, n):
    assert all(check_lemma(v, r, n) for v in range(2 * r + 1))


def test_lemma_examples():
    assert check_lemma(1, 2, 4)
    assert check_lemma(2, 1, 3)
    assert all(check_lemma(v, 3, 4) for v in range(7))


def test_build_K_terms():
    _, psi = odd_cycle_complex(2, 4)
    assert build_K(2, 4) == quotient_map_q(build_B(1, 2, 4), psi)
    _, psi = odd_cycle_complex(3, 4)
    assert build_K(3, 4) == quotient_map_q(build_B(4, 3, 4), psi) ^ quotient_map_q(build_B(6, 3, 4), psi)
    assert build_K(3, 5).dimension == 2


@pytest.mark.parametrize("r, n", SMALL)
def test_representative_properties(r, n):
    _, psi = odd_cycle_complex(r, n)
    rep = w1_power_representative(r, n)
    assert rep.dimension == n - 2
    assert len(rep) == len(build_A(r, r, n))
    assert not quotient_map_q(build_A(0, r, n), psi)
    assert rep == quotient_map_q(build_A(r + 1, r, n), psi)
    assert rep == pullback_dual_cochain(r, n)


def test_pullback_support_is_A_r_and_its_image():
    r, n = 2, 3
    _, psi = odd_cycle_complex(r, n)
    lifted = pullback_dual_cochain(r, n).lift().support
    a_r = set(build_A(r, r, n).support)
    assert lifted == a_r | {involution_image(x, psi) for x in a_r}


def test_representative_r2_n3():
    assert len(w1_power_representative(2, 3)) == 2


@pytest.mark.parametrize("r, n", [(1, 3), (2, 4), (3, 5), (3, 3)])
def test_check_theorem(r, n):
    report = check_theorem(r, n)
    assert report.theorem_holds and report.lemma_ok and report.q_A0_empty
    assert report.summary_line().startswith(f"r={r} n={n} lemma=ok theorem=ok |K|=")
    assert "dK = q(A_r): yes" in report.to_text()
