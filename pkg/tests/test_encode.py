import random

import pytest

from bpom import (Choice, ChoiceNode, EMPTY_POMSET, EncodeConfig, Loop,
                  LoopsUnsupported, PendingReceive, Seq, Skip, branch,
                  choice_compose, encode, interaction_count, leaves, parse,
                  par_compose, participants, seq_compose, subterms,
                  unfold_loops)
from bpom.corpus import (DISTRIBUTED_VOTING, MASTER_WORKERS, NESTED_CHOICE,
                         RELAY_CHOICE, random_choreography)


def count_choice_nodes(node) -> int:
    from bpom import BranchNode
    total, stack = 0, [node]
    while stack:
        cur = stack.pop()
        if isinstance(cur, ChoiceNode):
            total += 1
            stack += [cur.left, cur.right]
        elif isinstance(cur, BranchNode):
            stack += [c for c in cur.children if not isinstance(c, int)]
    return total


def closure(pom):
    out = set(pom.deps)
    changed = True
    while changed:
        changed = False
        for a, b in list(out):
            for c, d in list(out):
                if b == c and (a, d) not in out:
                    out.add((a, d))
                    changed = True
    return out


def test_empty():
    assert encode(Skip()) == EMPTY_POMSET
    assert EMPTY_POMSET.events == frozenset()
    assert EMPTY_POMSET.terminates()


def test_single_interaction():
    pom = encode(parse("a->b:x"))
    assert len(pom.events) == 2
    assert sorted(str(pom.labels[e]) for e in pom.events) == ["ab!x", "ab?x"]
    (dep,) = pom.deps
    assert str(pom.labels[dep[0]]) == "ab!x"
    assert str(pom.labels[dep[1]]) == "ab?x"


def test_pending_receive_is_one_event():
    pom = encode(PendingReceive("a", "b", "x"))
    assert len(pom.events) == 1
    assert pom.deps == frozenset()


def test_event_count_is_structural():
    rng = random.Random(21)
    for _ in range(200):
        term = random_choreography(rng)
        assert len(encode(term).events) == 2 * interaction_count(term)


def test_master_workers_shape():
    pom = encode(parse(MASTER_WORKERS))
    assert len(pom.events) == 8
    assert count_choice_nodes(pom.branching) == 0
    assert len(pom.branching.children) == 8
    # the closure of each worker thread is a 4-chain: 6 ordered pairs each
    assert len(closure(pom)) == 12


def test_distributed_voting_shape():
    pom = encode(parse(DISTRIBUTED_VOTING))
    assert len(pom.events) == 24
    assert count_choice_nodes(pom.branching) == 3


def test_seq_compose_adds_per_subject_cross_deps():
    first = encode(parse("b->c:x + b->d:x"))
    second = encode(parse("c->d:x"), EncodeConfig(fresh_id_start=10))
    got = seq_compose(first, second)
    by_label = {str(got.labels[e]): e for e in got.events}
    added = got.deps - first.deps - second.deps
    assert added == frozenset({
        (by_label["bc?x"], by_label["cd!x"]),   # subject c
        (by_label["bd?x"], by_label["cd?x"]),   # subject d
    })


def test_seq_compose_requires_disjoint_ids():
    pom = encode(parse("a->b:x"))
    with pytest.raises(AssertionError):
        seq_compose(pom, pom)


def test_par_compose_is_plain_union():
    left = encode(parse("a->b:x"))
    right = encode(parse("c->d:x"), EncodeConfig(fresh_id_start=2))
    got = par_compose(left, right)
    assert got.events == left.events | right.events
    assert got.deps == left.deps | right.deps
    assert got.branching == branch(*left.branching.children,
                                   *right.branching.children)


def test_choice_compose_wraps_in_single_choice():
    left = encode(parse("b->c:x"))
    right = encode(parse("b->d:x"), EncodeConfig(fresh_id_start=2))
    got = choice_compose(left, right)
    (node,) = got.branching.children
    assert isinstance(node, ChoiceNode)
    assert {tuple(sorted(leaves(node.left))), tuple(sorted(leaves(node.right)))} \
        == {tuple(sorted(left.events)), tuple(sorted(right.events))}


def test_relay_choice_structure():
    pom = encode(parse(RELAY_CHOICE))
    assert len(pom.events) == 8
    assert count_choice_nodes(pom.branching) == 1
    bare = [c for c in pom.branching.children if isinstance(c, int)]
    assert sorted(str(pom.labels[e]) for e in bare) == \
        ["ab!x", "ab?x", "cd!x", "cd?x"]


def test_nested_choice_structure():
    pom = encode(parse(NESTED_CHOICE))
    assert len(pom.events) == 14
    assert count_choice_nodes(pom.branching) == 3
    (outer,) = [c for c in pom.branching.children if isinstance(c, ChoiceNode)]
    assert count_choice_nodes(outer) == 3  # one nested on each side


def test_subject_ordering_soundness():
    """Same-subject events across a sequential border are always ordered."""
    rng = random.Random(22)
    for _ in range(100):
        left = random_choreography(rng, max_interactions=3)
        right = random_choreography(rng, max_interactions=3)
        l_pom = encode(left)
        r_pom = encode(right, EncodeConfig(fresh_id_start=100))
        got = seq_compose(l_pom, r_pom)
        full = closure(got)
        for e1 in l_pom.events:
            for e2 in r_pom.events:
                if got.labels[e1].subject == got.labels[e2].subject:
                    assert (e1, e2) in full


def test_fresh_ids_dense_from_start():
    pom = encode(parse("a->b:x ; c->d:y"), EncodeConfig(fresh_id_start=5))
    assert sorted(pom.events) == [5, 6, 7, 8]


def test_loops_rejected_by_default():
    with pytest.raises(LoopsUnsupported):
        encode(parse("(a->b:x)*"))


def test_unfold_shape():
    body = parse("a->b:x")
    assert unfold_loops(Loop(body), 0) == Skip()
    assert unfold_loops(Loop(body), 1) == Choice(Seq(body, Skip()), Skip())
    two = unfold_loops(Loop(body), 2)
    assert two == Choice(Seq(body, Choice(Seq(body, Skip()), Skip())), Skip())


def test_unfold_rewrites_nested_loops_bottom_up():
    term = parse("((a->b:x)* ; c->d:y)*")
    got = unfold_loops(term, 1)
    assert not any(isinstance(t, Loop) for t in subterms(got))


def test_unfold_leaves_loop_free_terms_alone():
    rng = random.Random(23)
    for _ in range(50):
        term = random_choreography(rng)
        assert unfold_loops(term, 3) == term


def test_encode_config_validation():
    with pytest.raises(ValueError):
        EncodeConfig(unfold_depth=-1)


def test_unfolded_encode_matches_unfolded_term():
    star = parse("(a->b:x + b->a:x)*")
    via_config = encode(star, EncodeConfig(unfold_depth=2))
    via_rewrite = encode(unfold_loops(star, 2))
    assert via_config == via_rewrite


def test_pretty_encode_agreement_on_participants():
    rng = random.Random(24)
    for _ in range(100):
        term = random_choreography(rng)
        pom = encode(term)
        seen = {lbl.source for lbl in pom.labels.values()} | \
               {lbl.target for lbl in pom.labels.values()}
        assert seen == participants(term)
