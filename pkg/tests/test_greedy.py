import pytest
from hypothesis import assume, given, settings, strategies as st

from totdom import graph as gr
from totdom.bounds import closed_bound
from totdom.graph import Side, VertexRef
from totdom.greedy import (
    MinDegreeTooSmall,
    UncoverableVertex,
    cover_side,
    greedy_tds,
    is_total_dominating,
    verify_bound,
)

from conftest import bipartite_graphs, brute_tds_size

X, Y = Side.X, Side.Y


class TestCoverSide:
    def test_k22(self, k22):
        chosen, trace = cover_side(k22, X)
        assert chosen == {VertexRef(X, 0)}
        assert trace.gains == [2]
        assert trace.steps[-1].uncovered_after == 0

    def test_c6_ties_lowest_index(self, c6):
        chosen, trace = cover_side(c6, X)
        assert chosen == {VertexRef(X, 0), VertexRef(X, 1)}
        assert trace.gains == [2, 1]
        assert [s.chosen for s in trace.steps] == [VertexRef(X, 0), VertexRef(X, 1)]
        assert [s.uncovered_after for s in trace.steps] == [1, 0]

    def test_isolated_target(self):
        g = gr.build(2, 3, [(0, 0), (1, 1)])
        with pytest.raises(UncoverableVertex) as info:
            cover_side(g, X)
        assert info.value.vertex == VertexRef(Y, 2)

    def test_prefers_max_residual(self):
        # x1 sees three Y vertices, x0 only one
        g = gr.build(2, 3, [(0, 0), (1, 0), (1, 1), (1, 2)])
        chosen, trace = cover_side(g, X)
        assert chosen == {VertexRef(X, 1)}
        assert trace.gains == [3]

    def test_residual_not_raw_degree(self):
        # x0 and x1 share y0,y1; x2 owns y2,y3 plus y0. After x0, x2 still gains 2.
        g = gr.build(3, 4, [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (2, 3)])
        chosen, trace = cover_side(g, X)
        assert [s.chosen.index for s in trace.steps] == [0, 2]
        assert trace.gains == [3, 1]

    @settings(max_examples=150, deadline=None)
    @given(bipartite_graphs(max_side=7), st.sampled_from([X, Y]))
    def test_trace_invariants(self, g, side):
        assume(all(g.adjacency(side.other)))
        chosen, trace = cover_side(g, side)
        covered = {w for v in chosen for w in g.neighbors(v)}
        assert covered == set(range(g.side_size(side.other)))
        after = [s.uncovered_after for s in trace.steps]
        assert all(s.gain >= 1 for s in trace.steps)
        assert all(a > b for a, b in zip(after, after[1:]))
        assert not after or after[-1] == 0
        assert sum(trace.gains) == g.side_size(side.other)


class TestIsTotalDominating:
    def test_cross_pair(self, k22):
        assert is_total_dominating(k22, {VertexRef(X, 0), VertexRef(Y, 0)})

    def test_same_side(self, k22):
        assert not is_total_dominating(k22, {VertexRef(X, 0), VertexRef(X, 1)})

    def test_empty(self, c6):
        assert not is_total_dominating(c6, set())

    def test_whole_vertex_set(self, c6):
        assert is_total_dominating(c6, c6.vertices())


class TestGreedyTds:
    @pytest.mark.parametrize("fixture,size", [("k22", 2), ("c6", 4), ("k33", 2)])
    def test_sizes_match_brute_force(self, request, fixture, size):
        g = request.getfixturevalue(fixture)
        tds, _, _ = greedy_tds(g)
        assert len(tds) == size == brute_tds_size(g)
        assert tds.from_x + tds.from_y == len(tds)

    def test_uncoverable_propagates(self, p4):
        g = gr.build(2, 2, [(0, 0), (1, 0)])
        with pytest.raises(UncoverableVertex):
            greedy_tds(g)

    def test_deterministic(self):
        g = gr.gen_min_degree(12, 9, 2, 0.2, seed=4)
        assert greedy_tds(g) == greedy_tds(g)

    @settings(max_examples=150, deadline=None)
    @given(bipartite_graphs(max_side=7))
    def test_valid_whenever_defined(self, g):
        assume(g.n_x and g.n_y and gr.min_degree(g) >= 1)
        tds, tx, ty = greedy_tds(g)
        assert is_total_dominating(g, tds.members)
        assert (tds.from_x, tds.from_y) == (len(tx), len(ty))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 40), st.integers(2, 6), st.integers(0, 2**32))
    def test_regular_gains_non_increasing(self, n_side, k, seed):
        assume(k <= n_side)
        g = gr.gen_k_regular(n_side, k, seed)
        _, tx, ty = greedy_tds(g)
        assert tx.gains_non_increasing() and ty.gains_non_increasing()

    @settings(max_examples=80, deadline=None)
    @given(
        st.integers(2, 30), st.integers(2, 30), st.integers(2, 6),
        st.floats(0, 0.4), st.integers(0, 2**32),
    )
    def test_bound_on_min_degree_graphs(self, n_x, n_y, k, p, seed):
        assume(k <= min(n_x, n_y))
        g = gr.gen_min_degree(n_x, n_y, k, p, seed)
        delta = gr.min_degree(g)
        tds, _, _ = greedy_tds(g)
        assert len(tds) <= g.order * closed_bound(delta).exact


class TestVerifyBound:
    def test_c6_tight(self, c6):
        rep = verify_bound(c6)
        assert (rep.size, rep.n, rep.k) == (4, 6, 2)
        assert rep.bound == 4
        assert rep.satisfied

    def test_k33(self, k33):
        rep = verify_bound(k33)
        assert rep.size == 2
        assert rep.bound == 6 * closed_bound(3).exact == pytest.approx(3.257143, abs=1e-6)
        assert rep.satisfied
        assert rep.henning == pytest.approx(6 * 0.699537, abs=1e-5)

    def test_p4_rejected(self, p4):
        with pytest.raises(MinDegreeTooSmall):
            verify_bound(p4)

    def test_doubled_graph_still_satisfies(self):
        g = gr.gen_min_degree(9, 4, 2, 0.1, seed=2)
        rep = verify_bound(gr.double_graph(g))
        assert rep.satisfied
        assert rep.k == gr.min_degree(g)
