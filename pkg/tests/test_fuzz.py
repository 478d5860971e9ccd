import json

from groupresp.axioms import check_ksym
from groupresp.contribution import LIKE
from groupresp.fileio import dumps
from groupresp.fuzz import FuzzConfig, generate_trees, run_member_suite
from groupresp.model import validate


def test_identical_config_identical_trees():
    cfg = FuzzConfig(seed=42, tree_count=20)
    first, stats_a = generate_trees(cfg)
    second, stats_b = generate_trees(cfg)
    assert stats_a == stats_b
    assert [dumps(t) for t in first] == [dumps(t) for t in second]


def test_different_seed_different_trees():
    a, _ = generate_trees(FuzzConfig(seed=1, tree_count=5))
    b, _ = generate_trees(FuzzConfig(seed=2, tree_count=5))
    assert [dumps(t) for t in a] != [dumps(t) for t in b]


def test_generated_trees_revalidate():
    trees, _ = generate_trees(FuzzConfig(seed=3, tree_count=30))
    for tree in trees:
        validate(tree.to_description())
        for node in tree.node_order:
            assert node in tree.branch(node)
            assert not (tree.branch(node) & set(tree.history(node)))


def test_info_sets_respect_recall_and_no_ancestry():
    trees, _ = generate_trees(FuzzConfig(seed=4, tree_count=40, info_set_rate=1.0))
    saw_class = False
    for tree in trees:
        for cls in tree.info_classes:
            saw_class = True
            owners = {tree.owner(n) for n in cls}
            assert len(owners) == 1
            action_sets = {frozenset(tree.actions(n)) for n in cls}
            assert len(action_sets) == 1
            for m in cls:
                for n in cls:
                    if m != n:
                        assert m not in tree.history(n)
    assert saw_class


def test_zero_tree_count_gives_empty_report():
    report = run_member_suite(FuzzConfig(seed=0, tree_count=0))
    assert report["violations"] == [] and report["trees"] == 0


def test_member_suite_report_is_byte_identical():
    cfg = FuzzConfig(seed=8, tree_count=10)
    a = json.dumps(run_member_suite(cfg), sort_keys=True)
    b = json.dumps(run_member_suite(cfg), sort_keys=True)
    assert a == b


def test_fuzzer_rediscovers_knowledge_symmetry_violation():
    # with information sets present, the likelihood-increase function must
    # trip KSym on some random tree, and the witness must re-check
    cfg = FuzzConfig(seed=42, tree_count=60, info_set_rate=0.8)
    report = run_member_suite(cfg, functions=[LIKE], axioms=["KSym"])
    hits = [v for v in report["violations"] if v["axiom"] == "KSym"]
    assert hits, "expected at least one rediscovered KSym violation"
    witness = hits[0]
    tree = validate(witness["tree"])
    again = check_ksym(tree, LIKE, frozenset(witness["group"]))
    assert again.violated
