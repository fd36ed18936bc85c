"""Named example protocols and seeded random generators for stress suites."""

from __future__ import annotations

import random
from typing import Sequence

from .chor import (Action, Chor, Choice, Interaction, Loop, Par, Seq,
                   send, recv)
from .parser import parse
from .pomset import BranchNode, BranchingPomset, ChoiceNode
from .semantics import is_dependently_guarded

MASTER_WORKERS = "(m->w1:t ; w1->m:d) || (m->w2:t ; w2->m:d)"

DISTRIBUTED_VOTING = (
    "((a->b:y || a->c:y) + (a->b:n || a->c:n))"
    " || ((b->a:y || b->c:y) + (b->a:n || b->c:n))"
    " || ((c->a:y || c->b:y) + (c->a:n || c->b:n))"
)

# One choice feeding a later interaction across the sequential border.
RELAY_CHOICE = "a->b:x ; (b->c:x + b->d:x) ; c->d:x"

# A choice nested inside each branch of an outer choice.
NESTED_CHOICE = (
    "((a->b:x ; (b->a:x + b->d:x)) + (a->c:x ; (c->a:x + c->d:x))) ; d->a:x"
)

NAMED_SOURCES: dict[str, str] = {
    "master-workers": MASTER_WORKERS,
    "distributed-voting": DISTRIBUTED_VOTING,
    "relay-choice": RELAY_CHOICE,
    "nested-choice": NESTED_CHOICE,
}


def named_examples() -> dict[str, Chor]:
    return {name: parse(src) for name, src in NAMED_SOURCES.items()}


def random_choreography(rng: random.Random,
                        max_interactions: int = 6,
                        participants: Sequence[str] = ("a", "b", "c", "d"),
                        messages: Sequence[str] = ("x", "y")) -> Chor:
    """A random loop-free choreography, hence dependently guarded for free."""
    if max_interactions < 1:
        raise ValueError("need room for at least one interaction")

    def interaction() -> Chor:
        src, tgt = rng.sample(list(participants), 2)
        return Interaction(src, tgt, rng.choice(list(messages)))

    def build(budget: int) -> tuple[Chor, int]:
        if budget <= 1 or rng.random() < 0.3:
            return interaction(), 1
        shape = rng.choice((Seq, Par, Choice))
        left, used = build(budget - 1)
        right, more = build(budget - used)
        return shape(left, right), used + more

    term, _ = build(rng.randint(1, max_interactions))
    return term


def random_guarded_loop_body(rng: random.Random,
                             max_interactions: int = 3,
                             participants: Sequence[str] = ("a", "b", "c"),
                             max_tries: int = 200) -> Chor:
    """Rejection-sample a loop body whose loop is dependently guarded."""
    for _ in range(max_tries):
        body = random_choreography(rng, max_interactions, participants)
        if is_dependently_guarded(Loop(body)):
            return body
    # a->b:x + b->a:x style bodies always qualify; fall back explicitly
    src, tgt = rng.sample(list(participants), 2)
    return Choice(Interaction(src, tgt, "x"), Interaction(tgt, src, "x"))


def random_pomset(rng: random.Random,
                  max_events: int = 12,
                  max_choice_depth: int = 3,
                  participants: Sequence[str] = ("a", "b", "c", "d"),
                  messages: Sequence[str] = ("x", "y"),
                  dep_density: float = 0.25) -> BranchingPomset:
    """A random well-formed branching pomset; deps respect event-id order."""
    n = rng.randint(1, max_events)
    events = list(range(n))
    deps = frozenset((i, j) for i in events for j in events
                     if i < j and rng.random() < dep_density)

    def label() -> Action:
        src, tgt = rng.sample(list(participants), 2)
        msg = rng.choice(list(messages))
        return send(src, tgt, msg) if rng.random() < 0.5 else recv(src, tgt, msg)

    labels = {e: label() for e in events}

    def children(chunk: list[int], depth: int) -> list:
        out: list = []
        idx = 0
        while idx < len(chunk):
            rest = len(chunk) - idx
            if depth > 0 and rest >= 2 and rng.random() < 0.45:
                take = rng.randint(2, rest)
                piece = chunk[idx:idx + take]
                cut = rng.randint(1, take - 1)
                out.append(ChoiceNode(
                    BranchNode(tuple(children(piece[:cut], depth - 1))),
                    BranchNode(tuple(children(piece[cut:], depth - 1)))))
                idx += take
            else:
                out.append(chunk[idx])
                idx += 1
        return out

    branching = BranchNode(tuple(children(events, max_choice_depth)))
    pom = BranchingPomset(frozenset(events), deps, labels, branching)
    pom.validate()
    return pom
