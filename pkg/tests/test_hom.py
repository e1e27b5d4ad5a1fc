from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from homcert.errors import InvalidArgumentError
from homcert.graphs import Graph, complete_graph, cycle_graph, edge_graph
from homcert.hom import (
    ComplexSlice,
    HomComplex,
    cell_dim,
    cell_key,
    cofacets,
    enumerate_cells,
    f_vector,
    facets,
    format_cell,
    is_valid_cell,
    make_cell,
    parse_cell,
)
from oracles import brute_cells, brute_dim, brute_hom_count, complete_edges, cycle_chromatic_count, cycle_edges

K2, K3, K4 = complete_graph(2), complete_graph(3), complete_graph(4)
C3, C5 = cycle_graph(3), cycle_graph(5)


def c(*entries):
    """Cell from 1-based color lists, as written in the docs."""
    return make_cell([[x - 1 for x in e] for e in entries])


# frozen from brute force over all set assignments (tests/oracles.py)
FROZEN_COUNTS = {
    ("C3", "K3", 0): 6,
    ("C3", "K3", 1): 0,
    ("C5", "K3", 0): 30,
    ("C5", "K3", 1): 30,
    ("C5", "K4", 0): 240,
}
GRAPHS = {"C3": C3, "C5": C5, "K3": K3, "K4": K4}


def test_frozen_counts_match_oracles():
    assert cycle_chromatic_count(3, 3) == 6
    assert cycle_chromatic_count(5, 3) == 30
    assert cycle_chromatic_count(5, 4) == 240
    cells = brute_cells(5, cycle_edges(5), 3, complete_edges(3))
    dims = Counter(brute_dim(x) for x in cells)
    assert (dims[0], dims[1]) == (FROZEN_COUNTS[("C5", "K3", 0)], FROZEN_COUNTS[("C5", "K3", 1)])
    cells = brute_cells(3, cycle_edges(3), 3, complete_edges(3))
    assert Counter(brute_dim(x) for x in cells) == {0: 6}


@pytest.mark.parametrize("key", sorted(FROZEN_COUNTS))
def test_enumerate_counts(key):
    t, g, d = key
    assert len(enumerate_cells(GRAPHS[t], GRAPHS[g], d)) == FROZEN_COUNTS[key]


def _brute_as_masks(tv, te, gv, ge):
    return {make_cell(x) for x in brute_cells(tv, te, gv, ge)}


@pytest.mark.parametrize(
    "T, G",
    [
        (C5, K3),
        (C3, K4),
        (edge_graph(), complete_graph(5)),
        # a non-complete target exercises the generic bipartite test
        (cycle_graph(4), Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])),
        (Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)]), cycle_graph(5)),
    ],
)
def test_enumeration_matches_brute_force(T, G):
    expected = _brute_as_masks(T.vertex_count, T.sorted_edges(), G.vertex_count, G.sorted_edges())
    hom = HomComplex(T, G)
    got = [cell for d in range(hom.max_dim_bound + 1) for cell in hom.enumerate(d)]
    assert len(got) == len(set(got))
    assert set(got) == expected


@pytest.mark.parametrize("tv, te", [(3, cycle_edges(3)), (5, cycle_edges(5)), (4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]), (6, [(0, 1), (2, 3), (4, 5), (1, 2)])])
@pytest.mark.parametrize("gv", [2, 3, 4])
def test_vertex_count_is_hom_count(tv, te, gv):
    T = Graph.from_edges(tv, te)
    G = complete_graph(gv)
    assert len(enumerate_cells(T, G, 0)) == brute_hom_count(tv, te, gv, complete_edges(gv))


def test_slices_are_sorted_canonically():
    s = enumerate_cells(C5, K3, 1)
    keys = [cell_key(x) for x in s]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    s.check()


def test_is_valid_cell_examples():
    assert not is_valid_cell(K2, K3, [[0], [0]])
    for n in range(3, 7):
        assert is_valid_cell(K2, complete_graph(n), [range(n - 1), [n - 1]])
    # entry 2 = {1} meets entry 0 = {1,2} across the C3 edge (2, 0)
    assert not is_valid_cell(C3, K3, [[0, 1], [2], [0]])
    assert not is_valid_cell(K2, K3, [[], [1]])


def test_is_valid_cell_rejects_bad_colors():
    with pytest.raises(InvalidArgumentError):
        is_valid_cell(K2, K3, [[3], [0]])
    with pytest.raises(InvalidArgumentError):
        is_valid_cell(K2, K3, [[0]])


def test_cell_dim():
    assert cell_dim(c([1], [2], [1], [2], [3])) == 0
    for n in range(3, 7):
        tau = make_cell([range(n - 1), [n - 1]])
        assert cell_dim(tau) == n - 2
    assert cell_dim(c([4], [1, 2, 3], [4], [1], [2])) == 2


def test_facets_examples():
    assert set(facets(c([1, 3], [2]))) == {c([1], [2]), c([3], [2])}
    assert facets(c([1], [2], [3])) == []
    tau = make_cell([range(4), [4]])
    fs = facets(tau)
    assert len(fs) == 4 and all(f[1] == tau[1] and f[0] | tau[0] == tau[0] for f in fs)


def test_cofacets_example():
    assert set(cofacets(K2, K3, c([1], [2]))) == {c([1, 3], [2]), c([1], [2, 3])}
    assert cofacets(K2, K3, c([1, 2], [3])) == []


@st.composite
def cell_in(draw, hom_choices=((C5, K4), (C5, K3), (cycle_graph(7), K4), (edge_graph(), complete_graph(5)))):
    T, G = draw(st.sampled_from(hom_choices))
    hom = HomComplex(T, G)
    dims = [d for d in range(hom.max_dim_bound + 1) if hom.enumerate(d)]
    d = draw(st.sampled_from(dims))
    cells = hom.enumerate(d)
    return hom, cells[draw(st.integers(0, len(cells) - 1))]


@settings(max_examples=200, deadline=None, derandomize=True)
@given(cell_in())
def test_face_duality(data):
    hom, sigma = data
    for f in facets(sigma):
        assert hom.is_valid(f)
        assert sigma in hom.cofacets(f)
    for tau in hom.cofacets(sigma):
        assert hom.is_valid(tau)
        assert cell_dim(tau) == cell_dim(sigma) + 1
        assert sigma in facets(tau)


@pytest.mark.parametrize(
    "T, G, expected",
    [(K2, K3, [6, 6]), (C3, K3, [6]), (C5, K3, [30, 30]), (C5, complete_graph(2), []), (K2, complete_graph(1), [])],
)
def test_f_vector(T, G, expected):
    assert f_vector(T, G) == expected


def test_f_vector_hom_k2_kn_brute():
    for n in (3, 4, 5):
        cells = brute_cells(2, [(0, 1)], n, complete_edges(n))
        dims = Counter(brute_dim(x) for x in cells)
        assert f_vector(K2, complete_graph(n)) == [dims[d] for d in range(max(dims) + 1)]


def test_parallel_enumeration_is_identical():
    hom = HomComplex(cycle_graph(7), K4)
    assert hom.enumerate(2, jobs=3) == hom.enumerate(2)


def test_enumerate_with_fixed_entries():
    hom = HomComplex(C5, K4)
    fixed = {2: 0b0111}
    got = hom.enumerate(2, fixed=fixed)
    assert got == [x for x in hom.enumerate(2) if x[2] == 0b0111]
    with pytest.raises(InvalidArgumentError):
        hom.enumerate(2, fixed={2: 0b10000})


def test_cell_text_round_trip():
    x = c([1, 3], [2], [4], [2], [4])
    assert format_cell(x) == "{1,3};{2};{4};{2};{4}"
    assert parse_cell(format_cell(x)) == x
    with pytest.raises(InvalidArgumentError):
        parse_cell("{1,3};2")


def test_slice_text_round_trip():
    s = enumerate_cells(C5, K3, 1)
    text = s.to_text()
    assert text.splitlines()[0] == "hom-slice T=cycle:5 G=complete:3 dim=1 count=30"
    assert ComplexSlice.from_text(text) == s


def test_slice_from_text_rejects_bad_cells():
    text = "hom-slice T=edge G=complete:3 dim=0 count=1\n{1};{1}\n"
    with pytest.raises(InvalidArgumentError):
        ComplexSlice.from_text(text)
    with pytest.raises(InvalidArgumentError):
        ComplexSlice.from_text("hom-slice T=edge G=complete:3 dim=0 count=2\n{1};{2}\n")
