import itertools
import statistics

import pytest

from temponet.community import link_communities
from temponet.model import (
    AnalysisError,
    Community,
    CommunityKey,
    Dispersion,
    EvolutionEvent,
    Frequency,
    StructuralCategory,
    TemporalCategory,
    TemporalEdge,
    Timeslice,
)
from temponet.taxonomy import (
    classify_all,
    classify_evolution,
    classify_structural,
    classify_temporal,
    axis_category_labels,
    taxonomy_matrix,
)

TREE = StructuralCategory.TREE
STAR = StructuralCategory.STAR
CIRCULAR = StructuralCategory.CIRCULAR
CLIQUE = StructuralCategory.CLIQUE
LOW = StructuralCategory.LOW_CONNECTIVITY


def _community(pairs, members=None, key=CommunityKey(1, 0), timestamps=None):
    ts = timestamps or [1] * len(pairs)
    edges = tuple(
        TemporalEdge(*sorted(p), t) for p, t in zip(pairs, ts)
    )
    nodes = members if members is not None else sorted({n for p in pairs for n in p})
    return Community(key=key, members=tuple(sorted(nodes)), intra_edges=edges)


# --- structural prototype generators ---------------------------------------


def clique(n):
    return list(itertools.combinations([f"v{i}" for i in range(n)], 2))


def cycle(n):
    names = [f"v{i}" for i in range(n)]
    return [(names[i], names[(i + 1) % n]) for i in range(n)]


def path(n):
    names = [f"v{i}" for i in range(n)]
    return [(names[i], names[i + 1]) for i in range(n - 1)]


def star(leaves):
    return [("hub", f"leaf{i}") for i in range(leaves)]


def binary_tree(n):
    return [(f"v{(i - 1) // 2}", f"v{i}") for i in range(1, n)]


def double_star(k):
    pairs = [("h1", "h2")]
    pairs += [("h1", f"a{i}") for i in range(k)]
    pairs += [("h2", f"b{i}") for i in range(k)]
    return pairs


STRUCTURAL_CASES = [
    # five cliques
    (clique(3), CLIQUE),
    (clique(4), CLIQUE),
    (clique(5), CLIQUE),
    (clique(8), CLIQUE),
    (clique(12), CLIQUE),
    # five circles (C3 lands under Clique and is tested separately)
    (cycle(4), CIRCULAR),
    (cycle(6), CIRCULAR),
    (cycle(10), CIRCULAR),
    (cycle(16), CIRCULAR),
    (cycle(25), CIRCULAR),
    # five stars
    (star(3), STAR),
    (star(5), STAR),
    (star(8), STAR),
    (star(12), STAR),
    (star(20), STAR),
    # five trees with branching, so they dodge the circle and star rules
    (binary_tree(7), TREE),
    (binary_tree(15), TREE),
    (binary_tree(31), TREE),
    (double_star(3), TREE),
    (double_star(5), TREE),
    # five low-connectivity graphs
    (path(4) + [("x0", "x1"), ("x1", "x2"), ("x2", "x3")], LOW),
    (path(5) + [("y0", "y1"), ("y1", "y2"), ("y2", "y3"), ("y3", "y4")], LOW),
    (clique(4) + [("z0", "z1"), ("z1", "z2"), ("z0", "z2")], LOW),
    (cycle(6) + [("v0", "v3"), ("v1", "v4")], LOW),
    (binary_tree(7) + [("w0", "w1")], LOW),
]


@pytest.mark.parametrize("pairs,expected", STRUCTURAL_CASES)
def test_structural_prototypes(pairs, expected):
    assert classify_structural(_community(pairs)) is expected


PERTURBED_CASES = [
    # near-clique keeps the label (27/28 edges, density 0.964)
    (clique(8)[:-1], CLIQUE),
    # K5 minus one edge sits exactly on the 0.9 density boundary
    (clique(5)[:-1], CLIQUE),
    # K6 minus two edges drops below 0.9 and matches nothing else
    (clique(6)[:-2], LOW),
    # a chord breaks the circle (m = n + 1)
    (cycle(12) + [("v0", "v6")], LOW),
    # removing a circle edge leaves a path, classified as a tree
    (path(12), TREE),
    # long paths pass the degree-2 test (18/20 = 0.9) and read as circular
    (path(20), CIRCULAR),
    # one leaf-to-leaf edge keeps the star label
    (star(6) + [("leaf0", "leaf1")], STAR),
    # hub ratio exactly 0.8 with one leaf hanging off another: star wins
    # over tree by precedence
    ([("h", "a"), ("h", "b"), ("h", "c"), ("h", "d"), ("a", "e")], STAR),
    # extra edge on a double star: no longer a tree, nothing else fits
    (double_star(3) + [("a0", "b0")], LOW),
    # two disconnected cliques
    (clique(4) + [(f"u{a}", f"u{b}") for a, b in itertools.combinations(range(4), 2)], LOW),
]


@pytest.mark.parametrize("pairs,expected", PERTURBED_CASES)
def test_structural_perturbed(pairs, expected):
    assert classify_structural(_community(pairs)) is expected


def test_structural_precedence_small_graphs():
    # C3 is also K3: the clique rule fires first
    assert classify_structural(_community(clique(3))) is CLIQUE
    # P3 satisfies the star predicate before the tree rule is reached
    assert classify_structural(_community(path(3))) is STAR
    # stars are trees too, but the star rule takes precedence
    for leaves in (3, 6, 10):
        assert classify_structural(_community(star(leaves))) is STAR


def test_structural_tiny_communities():
    assert classify_structural(_community([], members=["solo"])) is LOW
    assert classify_structural(_community([("a", "b")])) is CLIQUE


def test_structural_isolated_member_breaks_connectivity():
    c = _community(path(4), members=["v0", "v1", "v2", "v3", "ghost"])
    assert classify_structural(c) is LOW


# --- temporal --------------------------------------------------------------


def _slice(t_start, t_end, index=1):
    return Timeslice(index=index, t_start=t_start, t_end=t_end, edges=())


def _temporal(timestamps, t_start, t_end):
    pairs = [(f"a{i}", f"b{i}") for i in range(len(timestamps))]
    c = _community(pairs, timestamps=list(timestamps))
    return classify_temporal(c, _slice(t_start, t_end))


def test_temporal_sporadic_grouped_three_dense_timestamps():
    # 5 edges at each of t = 12, 13, 14 inside [10..19]
    ts = [12] * 5 + [13] * 5 + [14] * 5
    assert statistics.pstdev(ts) == pytest.approx(0.816, abs=5e-4)
    got = _temporal(ts, 10, 19)
    assert got == TemporalCategory(Frequency.SPORADIC, Dispersion.GROUPED)
    assert got.label == "Sporadic/Grouped"


def test_temporal_sporadic_dispersed_spread_singles():
    ts = [10, 15, 19]
    assert statistics.pstdev(ts) == pytest.approx(3.68, abs=5e-3)
    assert _temporal(ts, 10, 19).label == "Sporadic/Dispersed"


def test_temporal_continuous_dispersed_uniform():
    ts = list(range(10, 20))
    got = _temporal(ts, 10, 19)
    assert got.label == "Continuous/Dispersed"
    # a uniform stream sits near ratio 1, clearly above the 0.5 cut
    assert statistics.pstdev(ts) / (10 / 12 ** 0.5) > 0.9


def test_temporal_continuous_grouped_heavy_center():
    ts = [14] * 100 + [t for t in range(10, 20) if t != 14]
    assert _temporal(ts, 10, 19).label == "Continuous/Grouped"


def test_temporal_single_timestamp_slice():
    assert _temporal([7, 7, 7], 7, 7).label == "Continuous/Grouped"


def test_temporal_continuous_requires_every_timestamp():
    full = list(range(10, 20))
    assert _temporal(full, 10, 19).frequency is Frequency.CONTINUOUS
    # dropping all activity from a single timestamp flips the frequency
    reduced = [t for t in full if t != 13]
    assert _temporal(reduced, 10, 19).frequency is Frequency.SPORADIC


def test_temporal_no_edges_raises():
    c = _community([], members=["a", "b", "c"])
    with pytest.raises(AnalysisError):
        classify_temporal(c, _slice(1, 5))


# --- evolution -------------------------------------------------------------


def _comm_at(slice_index, local_id, members):
    return Community(
        key=CommunityKey(slice_index, local_id),
        members=tuple(sorted(members)),
        intra_edges=(),
    )


def test_evolution_four_slice_fixture_all_seven_events():
    a0 = _comm_at(1, 0, [f"a{i}" for i in range(1, 7)])
    a1 = _comm_at(1, 1, ["b1", "b2", "b3", "b4"])
    a2 = _comm_at(1, 2, ["c1", "c2", "c3"])
    b0 = _comm_at(2, 0, [f"a{i}" for i in range(1, 7)])
    b1 = _comm_at(2, 1, ["b1", "b2", "x1"])
    b2 = _comm_at(2, 2, ["b3", "b4", "x2"])
    c0 = _comm_at(3, 0, [f"a{i}" for i in range(1, 7)] + ["z1", "z2"])
    c1 = _comm_at(3, 1, ["b1", "b2", "b3", "b4", "x1", "x2"])
    c2 = _comm_at(3, 2, ["d1", "d2", "d3"])
    d0 = _comm_at(4, 0, ["a1", "a2", "a3"])
    d1 = _comm_at(4, 1, ["b1", "b2", "b3", "b4", "x1", "x2"])

    links = (
        link_communities([a0, a1, a2], [b0, b1, b2])
        + link_communities([b0, b1, b2], [c0, c1, c2])
        + link_communities([c0, c1, c2], [d0, d1])
    )
    communities = [a0, a1, a2, b0, b1, b2, c0, c1, c2, d0, d1]
    events = classify_evolution(links, communities)

    E = EvolutionEvent
    expected = {
        a0.key: {E.BIRTH, E.PRESERVE},
        a1.key: {E.BIRTH, E.SPLIT, E.CONTRACT},
        a2.key: {E.BIRTH, E.DEATH},
        b0.key: {E.GROW},
        b1.key: {E.GROW},
        b2.key: {E.GROW},
        c0.key: {E.CONTRACT},
        c1.key: {E.MERGE, E.PRESERVE},
        c2.key: {E.BIRTH, E.DEATH},
        d0.key: {E.DEATH},
        d1.key: {E.DEATH},
    }
    assert events == {k: frozenset(v) for k, v in expected.items()}
    seen = set().union(*events.values())
    assert seen == set(EvolutionEvent)


def test_evolution_every_community_has_an_event():
    lone = _comm_at(1, 0, ["a", "b", "c"])
    events = classify_evolution([], [lone])
    assert events[lone.key] == frozenset({EvolutionEvent.BIRTH, EvolutionEvent.DEATH})


def test_evolution_single_branch_is_not_a_split():
    a = _comm_at(1, 0, ["1", "2", "3", "4"])
    b = _comm_at(2, 0, ["1", "2", "3"])
    links = link_communities([a], [b])
    events = classify_evolution(links, [a, b])
    assert EvolutionEvent.SPLIT not in events[a.key]
    assert EvolutionEvent.CONTRACT in events[a.key]


# --- matrices --------------------------------------------------------------


def _labelled(key, structural, temporal, events):
    return Community(
        key=key,
        members=("a", "b", "c"),
        intra_edges=(),
        structural=structural,
        temporal=temporal,
        events=frozenset(events),
    )


CG = TemporalCategory(Frequency.CONTINUOUS, Dispersion.GROUPED)
SD = TemporalCategory(Frequency.SPORADIC, Dispersion.DISPERSED)


def test_matrix_structural_by_temporal_conservation():
    comms = [
        _labelled(CommunityKey(1, 0), CLIQUE, CG, [EvolutionEvent.BIRTH]),
        _labelled(CommunityKey(1, 1), CLIQUE, SD, [EvolutionEvent.BIRTH]),
        _labelled(CommunityKey(2, 0), STAR, SD, [EvolutionEvent.DEATH]),
    ]
    mat = taxonomy_matrix(comms, "structural", "temporal")
    assert mat.x_labels == ("Tree", "Star", "Circular", "Clique", "Low-connectivity")
    assert mat.y_labels == (
        "Continuous/Grouped",
        "Continuous/Dispersed",
        "Sporadic/Grouped",
        "Sporadic/Dispersed",
    )
    assert sum(map(sum, mat.counts)) == 3
    assert mat.counts[0][3] == 1  # Continuous/Grouped x Clique
    assert mat.counts[3][3] == 1  # Sporadic/Dispersed x Clique
    assert mat.counts[3][1] == 1  # Sporadic/Dispersed x Star


def test_matrix_same_axis_is_diagonal_for_single_valued_axes():
    comms = [
        _labelled(CommunityKey(1, i), cat, CG, [EvolutionEvent.BIRTH])
        for i, cat in enumerate([CLIQUE, CLIQUE, TREE, STAR])
    ]
    mat = taxonomy_matrix(comms, "structural", "structural")
    for yi, row in enumerate(mat.counts):
        for xi, count in enumerate(row):
            if yi != xi:
                assert count == 0
    assert mat.counts[3][3] == 2 and mat.counts[0][0] == 1 and mat.counts[1][1] == 1


def test_matrix_evolution_multi_count():
    comms = [
        _labelled(
            CommunityKey(1, 0),
            CLIQUE,
            CG,
            [EvolutionEvent.BIRTH, EvolutionEvent.SPLIT, EvolutionEvent.CONTRACT],
        )
    ]
    mat = taxonomy_matrix(comms, "evolution", "structural")
    # one community, one event each in three evolution columns
    assert sum(map(sum, mat.counts)) == 3
    clique_row = mat.counts[mat.y_labels.index("Clique")]
    assert clique_row[mat.x_labels.index("Birth")] == 1
    assert clique_row[mat.x_labels.index("Split")] == 1
    assert clique_row[mat.x_labels.index("Contract")] == 1

    both = taxonomy_matrix(comms, "evolution", "evolution")
    # event pairs contribute a full cross product
    assert sum(map(sum, both.counts)) == 9


def test_matrix_axis_validation_and_case():
    comms = [_labelled(CommunityKey(1, 0), CLIQUE, CG, [EvolutionEvent.BIRTH])]
    upper = taxonomy_matrix(comms, "Structural", "TEMPORAL")
    assert upper.axis_x == "structural" and upper.axis_y == "temporal"
    with pytest.raises(ValueError):
        taxonomy_matrix(comms, "structural", "bogus")
    with pytest.raises(ValueError):
        axis_category_labels("nope")


def test_axis_category_labels_exact_strings():
    assert axis_category_labels("evolution") == (
        "Birth",
        "Death",
        "Grow",
        "Contract",
        "Split",
        "Merge",
        "Preserve",
    )


# --- classify_all ----------------------------------------------------------


def test_classify_all_attaches_every_axis():
    pairs = clique(4)
    edges = tuple(TemporalEdge(*sorted(p), 3) for p in pairs)
    c = Community(key=CommunityKey(1, 0), members=tuple(sorted({n for p in pairs for n in p})), intra_edges=edges)
    slices = {1: Timeslice(index=1, t_start=1, t_end=5, edges=edges)}
    out = classify_all([c], slices, links=[])
    assert len(out) == 1
    got = out[0]
    assert got.structural is CLIQUE
    assert got.temporal.label == "Sporadic/Grouped"
    assert got.events == frozenset({EvolutionEvent.BIRTH, EvolutionEvent.DEATH})
    assert got.members == c.members and got.key == c.key
