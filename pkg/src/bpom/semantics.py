"""Small-step semantics: reduction, termination, partial termination, guardedness."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .chor import (Action, Chor, Choice, Interaction, Loop, Par, PendingReceive,
                   Seq, Skip, participants, recv, send, subterms)


@dataclass(frozen=True)
class ChorStep:
    """One reduction c --label--> target."""

    label: Action
    target: Chor


@lru_cache(maxsize=None)
def steps(c: Chor) -> frozenset[ChorStep]:
    """All single reductions of c; empty when c is stuck."""
    return frozenset(_steps(c))


def _steps(c: Chor) -> Iterator[ChorStep]:
    if isinstance(c, Interaction):
        yield ChorStep(c.send_action(), PendingReceive(c.source, c.target, c.msg))
    elif isinstance(c, PendingReceive):
        yield ChorStep(c.recv_action(), Skip())
    elif isinstance(c, Seq):
        for st in _steps(c.first):
            yield ChorStep(st.label, Seq(st.target, c.second))
        # weak sequencing: the second part may act once the first partially
        # terminates for the label's subject
        for st in _steps(c.second):
            rest = partial_terminate(c.first, st.label)
            if rest is not None:
                yield ChorStep(st.label, Seq(rest, st.target))
    elif isinstance(c, Par):
        for st in _steps(c.left):
            yield ChorStep(st.label, Par(st.target, c.right))
        for st in _steps(c.right):
            yield ChorStep(st.label, Par(c.left, st.target))
    elif isinstance(c, Choice):
        # the first step resolves the choice
        yield from _steps(c.left)
        yield from _steps(c.right)
    elif isinstance(c, Loop):
        for st in _steps(c.body):
            yield ChorStep(st.label, Seq(st.target, c))
    # Skip has no steps


@lru_cache(maxsize=None)
def terminates(c: Chor) -> bool:
    """True iff c can be considered finished as it stands."""
    if isinstance(c, (Skip, Loop)):
        return True
    if isinstance(c, Seq):
        return terminates(c.first) and terminates(c.second)
    if isinstance(c, Par):
        return terminates(c.left) and terminates(c.right)
    if isinstance(c, Choice):
        return terminates(c.left) or terminates(c.right)
    return False


def partial_terminate(c: Chor, label: Action) -> Optional[Chor]:
    """The residue of c once label's subject must act, or None when c blocks.

    Only the subject of the label matters. Branches that involve the subject
    are discarded; a choice keeps whichever branches survive; a loop either
    survives untouched (body unchanged) or collapses to 0.
    """
    return _pt(c, label.subject)


@lru_cache(maxsize=None)
def _pt(c: Chor, subj: str) -> Optional[Chor]:
    if isinstance(c, Skip):
        return c
    if isinstance(c, Interaction):
        return None if subj in (c.source, c.target) else c
    if isinstance(c, PendingReceive):
        return None if subj == c.target else c
    if isinstance(c, Loop):
        inner = _pt(c.body, subj)
        return c if inner == c.body else Skip()
    if isinstance(c, Choice):
        left = _pt(c.left, subj)
        right = _pt(c.right, subj)
        if left is not None and right is not None:
            return Choice(left, right)
        if left is not None:
            return left
        return right
    if isinstance(c, Seq):
        first = _pt(c.first, subj)
        second = _pt(c.second, subj)
        if first is None or second is None:
            return None
        return Seq(first, second)
    assert isinstance(c, Par)
    left = _pt(c.left, subj)
    right = _pt(c.right, subj)
    if left is None or right is None:
        return None
    return Par(left, right)


@dataclass(frozen=True)
class LoopVerdict:
    """Guardedness verdict for one loop subterm."""

    loop: Loop
    guarded: bool
    offending_subject: Optional[str]


def loop_verdicts(c: Chor) -> tuple[LoopVerdict, ...]:
    """A verdict per loop subterm, outermost first."""
    return tuple(_check_loop(sub) for sub in subterms(c) if isinstance(sub, Loop))


def _check_loop(loop: Loop) -> LoopVerdict:
    body = loop.body
    for subj in sorted(participants(body)):
        peer = subj + "0"  # any participant distinct from subj works
        for probe in (send(subj, peer, "x"), recv(peer, subj, "x")):
            residue = partial_terminate(body, probe)
            if residue is not None and residue != body:
                return LoopVerdict(loop, False, subj)
    return LoopVerdict(loop, True, None)


def is_dependently_guarded(c: Chor) -> bool:
    """True iff every loop body partially terminates to itself or not at all.

    Partial termination only inspects the label's subject, so one send and one
    receive probe per participant of the body cover all labels.
    """
    return all(v.guarded for v in loop_verdicts(c))
