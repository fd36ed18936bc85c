"""Pomset interpretation of choreographies.

Loops have no finite pomset form, so they are either rejected or rewritten
away up front: each loop becomes a nest of (body ; rest) + 0 choices of the
configured depth, with the innermost residual loop replaced by 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .chor import (Chor, Choice, Interaction, Loop, Par, PendingReceive, Seq,
                   Skip, has_loop)
from .pomset import BranchNode, BranchingPomset, ChoiceNode


class LoopsUnsupported(ValueError):
    """The input contains a loop and no unfold depth was given."""


@dataclass(frozen=True)
class EncodeConfig:
    """unfold_depth None rejects loops; n >= 0 unfolds them n times."""

    unfold_depth: int | None = None
    fresh_id_start: int = 0

    def __post_init__(self) -> None:
        if self.unfold_depth is not None and self.unfold_depth < 0:
            raise ValueError("unfold depth must be >= 0")


EMPTY_POMSET = BranchingPomset(frozenset(), frozenset(), {}, BranchNode(()))


def unfold_loops(c: Chor, depth: int) -> Chor:
    """Rewrite every loop to a depth-deep (body ; rest) + 0 nest, bottom-up."""
    if isinstance(c, Seq):
        return Seq(unfold_loops(c.first, depth), unfold_loops(c.second, depth))
    if isinstance(c, Par):
        return Par(unfold_loops(c.left, depth), unfold_loops(c.right, depth))
    if isinstance(c, Choice):
        return Choice(unfold_loops(c.left, depth), unfold_loops(c.right, depth))
    if isinstance(c, Loop):
        body = unfold_loops(c.body, depth)
        out: Chor = Skip()
        for _ in range(depth):
            out = Choice(Seq(body, out), Skip())
        return out
    return c


def encode(c: Chor, config: EncodeConfig = EncodeConfig()) -> BranchingPomset:
    """The branching pomset of c; raises LoopsUnsupported in reject mode."""
    if has_loop(c):
        if config.unfold_depth is None:
            raise LoopsUnsupported(
                "the input contains a loop; give an unfold depth")
        c = unfold_loops(c, config.unfold_depth)
    fresh = itertools.count(config.fresh_id_start)
    return _encode(c, fresh)


def _encode(c: Chor, fresh: Iterator[int]) -> BranchingPomset:
    if isinstance(c, Skip):
        return EMPTY_POMSET
    if isinstance(c, Interaction):
        snd, rcv = next(fresh), next(fresh)
        return BranchingPomset(
            frozenset((snd, rcv)),
            frozenset(((snd, rcv),)),
            {snd: c.send_action(), rcv: c.recv_action()},
            BranchNode((snd, rcv)))
    if isinstance(c, PendingReceive):
        rcv = next(fresh)
        return BranchingPomset(frozenset((rcv,)), frozenset(),
                               {rcv: c.recv_action()}, BranchNode((rcv,)))
    if isinstance(c, Seq):
        return seq_compose(_encode(c.first, fresh), _encode(c.second, fresh))
    if isinstance(c, Par):
        return par_compose(_encode(c.left, fresh), _encode(c.right, fresh))
    if isinstance(c, Choice):
        return choice_compose(_encode(c.left, fresh), _encode(c.right, fresh))
    raise AssertionError(f"loops must be unfolded before encoding: {c!r}")


def seq_compose(r1: BranchingPomset, r2: BranchingPomset) -> BranchingPomset:
    """Union plus, per participant, all orderings from r1's events to r2's."""
    assert not (r1.events & r2.events), "event ids must be disjoint"
    by_subject: dict[str, list[int]] = {}
    for e in r2.events:
        by_subject.setdefault(r2.labels[e].subject, []).append(e)
    cross = {(e1, e2)
             for e1 in r1.events
             for e2 in by_subject.get(r1.labels[e1].subject, ())}
    return BranchingPomset(
        r1.events | r2.events,
        r1.deps | r2.deps | cross,
        {**r1.labels, **r2.labels},
        BranchNode(r1.branching.children + r2.branching.children))


def par_compose(r1: BranchingPomset, r2: BranchingPomset) -> BranchingPomset:
    """Componentwise union; no orderings are added."""
    assert not (r1.events & r2.events), "event ids must be disjoint"
    return BranchingPomset(
        r1.events | r2.events,
        r1.deps | r2.deps,
        {**r1.labels, **r2.labels},
        BranchNode(r1.branching.children + r2.branching.children))


def choice_compose(r1: BranchingPomset, r2: BranchingPomset) -> BranchingPomset:
    """Union of components under a single root choice."""
    assert not (r1.events & r2.events), "event ids must be disjoint"
    return BranchingPomset(
        r1.events | r2.events,
        r1.deps | r2.deps,
        {**r1.labels, **r2.labels},
        BranchNode((ChoiceNode(r1.branching, r2.branching),)))
