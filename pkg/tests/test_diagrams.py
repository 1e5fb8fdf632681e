import pytest

from chinoid import core, diagrams
from chinoid.diagrams import Diagram, branch_from_steps, children, enumerate_leaves, first_level, is_leaf
from chinoid.quotients import congruent_mod, kappa_key


def D(n, arcs=(), dots=()):
    return Diagram(n, frozenset(arcs), frozenset(dots))


def node(n, *steps):
    return branch_from_steps(n, steps).leaf


def pictures(ds):
    return [(sorted(d.arcs), sorted(d.dots)) for d in ds]


@pytest.mark.parametrize("n", range(2, 9))
def test_first_level_count(n):
    assert len(first_level(n)) == 2 * n - 3


def test_first_level_too_small():
    with pytest.raises(diagrams.RankTooSmall):
        first_level(1)


def test_children_examples():
    after_dot = children(node(3, ("dot", 2)))
    assert pictures(after_dot) == [([(1, 3)], [2])]
    raw = children(node(4, ("arc", 2, 3)), prune=False)
    assert pictures(raw) == [([(1, 4), (2, 3)], []), ([(2, 3)], [1]), ([(2, 3)], [4])]
    # dots on the boundary have no room for an enclosing arc and are dropped
    assert pictures(children(node(4, ("arc", 2, 3)))) == [([(1, 4), (2, 3)], [])]
    with pytest.raises(diagrams.IsLeaf):
        children(node(2, ("arc", 1, 2)))


def test_root_children():
    assert children(diagrams.root(4)) == first_level(4)


def test_is_leaf_examples():
    assert is_leaf(node(3, ("arc", 1, 2)))
    assert not is_leaf(node(3, ("dot", 2)))


def test_worked_example_n15():
    steps = [("arc", 10, 11), ("arc", 9, 12), ("dot", 8), ("dot", 7), ("dot", 6),
             ("arc", 5, 13), ("dot", 14), ("arc", 4, 15)]
    b = branch_from_steps(15, steps)
    assert is_leaf(b.leaf)
    assert b.leaf.render() == "○ ○ ○ ( ( ● ● ● ( ( ) ) ) ● )"


def test_side_rule():
    # after a left dot only the enclosing arc or another left dot may follow
    d = node(6, ("arc", 3, 4), ("dot", 2))
    assert pictures(children(d, prune=False)) == [([(1, 5), (3, 4)], [2]), ([(3, 4)], [1, 2])]
    with pytest.raises(ValueError):
        branch_from_steps(6, [("arc", 3, 4), ("dot", 2), ("dot", 5)])


@pytest.mark.parametrize("n,count", [(2, 1), (3, 3), (4, 5)])
def test_golden_leaf_counts(n, count):
    assert len(enumerate_leaves(n)) == count


@pytest.mark.parametrize("n,count", [(5, 9), (6, 17), (7, 31), (8, 57)])
def test_regression_leaf_counts(n, count):
    assert len(enumerate_leaves(n)) == count


def test_regression_node_counts():
    assert [sum(1 for _ in diagrams.walk(n)) for n in range(2, 9)] == [1, 4, 8, 17, 35, 68, 130]
    assert [sum(1 for _ in diagrams.walk(n, prune=False)) for n in range(2, 9)] == [1, 4, 10, 23, 47, 92, 176]


def test_n4_leaves_match_figure():
    got = {(tuple(sorted(b.leaf.arcs)), tuple(sorted(b.leaf.dots))) for b in enumerate_leaves(4)}
    assert got == {
        (((1, 2),), ()), (((1, 3),), (2,)), (((1, 4), (2, 3)), ()),
        (((2, 4),), (3,)), (((3, 4),), ()),
    }


@pytest.mark.parametrize("n", range(2, 9))
def test_tree_invariants(n):
    for b in diagrams.walk(n):
        d = b.leaf
        u, v = d.interval
        assert d.used == frozenset(range(u, v + 1))
        # every arc encloses everything built before it, so arcs are nested
        arcs = sorted(d.arcs, key=lambda a: a[1] - a[0])
        for inner, outer in zip(arcs, arcs[1:]):
            assert outer[0] < inner[0] and inner[1] < outer[1]
        if not is_leaf(d):
            assert children(d), d.render()


@pytest.mark.parametrize("n", range(2, 9))
def test_pure_arc_histories_are_concentric(n):
    for b in diagrams.walk(n):
        if all(s.kind == "arc" for s in b.steps):
            (s,) = [lo for lo, hi in b.leaf.arcs if hi == lo + 1]
            t = len(b.leaf.arcs)
            assert b.leaf.arcs == {(s - r + 1, s + r) for r in range(1, t + 1)}


def test_mixed_history_arcs_are_not_concentric():
    # dot histories shift the centre, so the concentric form only holds for pure arcs
    d = node(6, ("arc", 3, 4), ("dot", 2), ("arc", 1, 5))
    assert d.arcs == {(3, 4), (1, 5)}


def test_json_round_trip():
    for b in diagrams.walk(5, prune=False):
        d = b.leaf
        back = Diagram.from_json(d.to_json())
        assert back == d and back.last == d.last and back.side == d.side
    assert D(4, [(2, 3)]).to_json() == {"n": 4, "arcs": [[2, 3]], "dots": []}


def test_from_json_rejects_unknown():
    with pytest.raises(ValueError):
        Diagram.from_json({"n": 4, "arcs": [[1, 3]], "dots": []})


def test_render():
    assert D(4, [(2, 3)], [1]).render() == "● ( ) ○"


@pytest.mark.parametrize("n", [3, 4])
def test_prime_catalog(n):
    checks = diagrams.prime_catalog_check(n)
    assert [c.name for c in checks if c.passed] and all(c.passed for c in checks)
    assert sorted(c.name for c in checks) == sorted(e.name for e in diagrams.PRIME_CATALOG[n])


def test_catalog_check_detects_a_bad_relation(monkeypatch):
    # a3 a1 central is a P2 relation for n = 4, not a P1 one
    bad = diagrams._entry("P1", [(1, 2)], [], [(2, 3, 4)], [(2, 1), (1, 3)])
    cat = dict(diagrams.PRIME_CATALOG)
    cat[4] = (bad,) + cat[4][1:]
    monkeypatch.setattr(diagrams, "PRIME_CATALOG", cat)
    with pytest.raises(diagrams.CatalogMismatch) as exc:
        diagrams.prime_catalog_check(4)
    failed = [c for c in exc.value.report if not c.passed]
    assert failed and failed[0].name == "P1"


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_shape_relations(n):
    seen = set()
    for b in diagrams.walk(n):
        for family, pairs in diagrams.shape_relations(b.leaf).items():
            seen.add(family)
            for x, y in pairs:
                assert congruent_mod(b, x, y), (str(b), family, x, y)
    if n >= 5:
        assert seen == {"rel1-1", "rel1-2", "rel2-1", "rel2-2", "rel2-3", "rel2-4",
                        "rel3-1", "rel3-2", "rel3-3", "rel3-4", "rel3-5"}


def test_embedding_n4_length5():
    leaves = enumerate_leaves(4)
    keys = {}
    for length in range(6):
        for cls in core.word_classes(4, length):
            w = min(cls)
            key = tuple(kappa_key(b, w) for b in leaves)
            assert key not in keys, (keys.get(key), w)
            keys[key] = w
