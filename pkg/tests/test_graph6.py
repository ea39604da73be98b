import pytest

networkx = pytest.importorskip("networkx")

from openpack.formats import (
    FormatError,
    parse_edge_list_text,
    parse_graph6,
    to_edge_list_text,
    to_graph6,
)
from openpack.graph import (
    Graph,
    complete,
    cycle,
    enumerate_all_graphs,
    from_edge_list,
    path,
    random_graph,
)


class TestKnownEncodings:
    def test_k2(self):
        assert to_graph6(from_edge_list(2, [(0, 1)])) == "A_"
        assert parse_graph6("A_") == from_edge_list(2, [(0, 1)])

    def test_k3(self):
        assert to_graph6(complete(3)) == "Bw"

    def test_single_vertex(self):
        assert to_graph6(Graph(1, (0,))) == "@"

    def test_header_tolerated(self):
        assert parse_graph6(">>graph6<<A_") == from_edge_list(2, [(0, 1)])


class TestRoundTrip:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_exhaustive_small(self, n):
        for g in enumerate_all_graphs(n):
            assert parse_graph6(to_graph6(g)) == g

    def test_sampled_n7(self):
        from openpack.graph import pair_order

        pairs = pair_order(7)
        count = 0
        for code in range(0, 1 << len(pairs), 101):
            adj = [0] * 7
            for t, (u, v) in enumerate(pairs):
                if code >> t & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            g = Graph(7, adj)
            assert parse_graph6(to_graph6(g)) == g
            count += 1
        assert count > 20000

    @pytest.mark.parametrize("n", [10, 33, 62])
    def test_larger_random(self, n):
        for seed in range(5):
            g = random_graph(n, 0.3, seed)
            assert parse_graph6(to_graph6(g)) == g


class TestAgainstNetworkx:
    def _nx_encode(self, g):
        nxg = networkx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(g.edges())
        return networkx.to_graph6_bytes(nxg, header=False).decode().strip()

    @pytest.mark.parametrize("n", range(1, 6))
    def test_encoder_agrees(self, n):
        for g in enumerate_all_graphs(n):
            assert to_graph6(g) == self._nx_encode(g)

    def test_decoder_agrees_on_random(self):
        for seed in range(10):
            g = random_graph(12, 0.4, seed)
            line = self._nx_encode(g)
            assert parse_graph6(line) == g


class TestErrors:
    def test_empty(self):
        with pytest.raises(FormatError):
            parse_graph6("")

    def test_bad_header_char(self):
        with pytest.raises(FormatError):
            parse_graph6("\x1f@@")

    def test_long_form_unsupported(self):
        with pytest.raises(FormatError):
            parse_graph6("~??")

    def test_zero_vertices(self):
        with pytest.raises(FormatError):
            parse_graph6("?")

    def test_truncated_payload(self):
        line = to_graph6(complete(8))
        with pytest.raises(FormatError):
            parse_graph6(line[:-1])

    def test_trailing_garbage(self):
        with pytest.raises(FormatError):
            parse_graph6("A_A")

    def test_stray_low_character(self):
        with pytest.raises(FormatError):
            parse_graph6("C" + chr(30))

    def test_encode_too_large(self):
        with pytest.raises(FormatError):
            to_graph6(random_graph(63, 0.1, 0))


class TestEdgeListFormat:
    def test_round_trip(self):
        g = cycle(5)
        assert parse_edge_list_text(to_edge_list_text(g)) == g

    def test_format_shape(self):
        text = to_edge_list_text(path(3))
        lines = text.splitlines()
        assert lines[0] == "3 2"
        assert len(lines) == 3

    def test_count_mismatch(self):
        with pytest.raises(FormatError):
            parse_edge_list_text("2 2\n0 1\n")

    def test_bad_token(self):
        with pytest.raises(FormatError):
            parse_edge_list_text("2 1\n0 x\n")

    def test_missing_heading(self):
        with pytest.raises(FormatError):
            parse_edge_list_text("")
