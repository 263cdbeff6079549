import pytest

from temponet.model import (
    Community,
    CommunityKey,
    EmptyNetwork,
    TemporalEdge,
    build_network,
    canonical_edge,
    check_slice_disjoint,
    network_summary,
)


def test_canonical_edge_orders_endpoints():
    assert canonical_edge("b", "a", 3) == TemporalEdge("a", "b", 3)
    assert canonical_edge("a", "b", 3) == TemporalEdge("a", "b", 3)


def test_build_network_collapses_duplicates_and_reversals():
    net = build_network([("a", "b", 1), ("b", "a", 1), ("a", "b", 1), ("a", "b", 2)])
    assert net.edges == (TemporalEdge("a", "b", 1), TemporalEdge("a", "b", 2))
    assert net.duplicates_collapsed == 2


def test_build_network_drops_self_loops():
    net = build_network([("a", "a", 1), ("a", "b", 1)])
    assert net.self_loops_dropped == 1
    assert net.nodes == frozenset({"a", "b"})


def test_build_network_empty_raises():
    with pytest.raises(EmptyNetwork):
        build_network([("a", "a", 1)])
    with pytest.raises(EmptyNetwork):
        build_network([])


def test_build_network_rejects_non_integer_timestamps():
    with pytest.raises(TypeError):
        build_network([("a", "b", 1.5)])
    with pytest.raises(TypeError):
        build_network([("a", "b", True)])


def test_build_network_edge_order_is_canonical():
    e = [("c", "d", 5), ("a", "b", 5), ("a", "b", 1)]
    net1 = build_network(e)
    net2 = build_network(list(reversed(e)))
    assert net1.edges == net2.edges
    assert [x.timestamp for x in net1.edges] == [1, 5, 5]


def test_build_network_filters_foreign_metadata():
    net = build_network([("a", "b", 1)], {"a": "A", "z": "Z"})
    assert net.metadata == {"a": "A"}
    assert net.metadata_dropped == ("z",)


def test_span_and_active_timestamps():
    net = build_network([("a", "b", 10), ("a", "c", 14)])
    assert net.timestamp_range == (10, 14)
    assert net.span == 5
    assert net.active_timestamps == (10, 14)


def test_network_summary_counts():
    net = build_network(
        [("a", "b", 1), ("a", "c", 1), ("a", "b", 2)], {"a": "X", "b": "X", "c": "Y"}
    )
    s = network_summary(net)
    assert (s.node_count, s.edge_count, s.active_timestamp_count) == (3, 3, 2)
    assert s.metadata_categories == ("X", "Y")
    d = s.to_dict()
    assert d["nodes"] == 3 and d["t_min"] == 1 and d["t_max"] == 2


def _comm(slice_index, local_id, members):
    return Community(
        key=CommunityKey(slice_index, local_id),
        members=tuple(sorted(members)),
        intra_edges=(),
    )


def test_check_slice_disjoint():
    ok = [_comm(1, 0, "abc"), _comm(1, 1, "def"), _comm(2, 0, "abc")]
    assert check_slice_disjoint(ok)
    bad = [_comm(1, 0, "abc"), _comm(1, 1, "cde")]
    assert not check_slice_disjoint(bad)


def test_community_aggregated_edges_dedup():
    c = Community(
        key=CommunityKey(1, 0),
        members=("a", "b", "c"),
        intra_edges=(
            TemporalEdge("a", "b", 1),
            TemporalEdge("a", "b", 2),
            TemporalEdge("b", "c", 1),
        ),
    )
    assert c.aggregated_edges == (("a", "b"), ("b", "c"))
    assert c.size == 3
