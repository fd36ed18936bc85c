"""Choreography terms: abstract syntax, communication actions, structural queries."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

SEND = "send"
RECV = "recv"


class IllFormed(ValueError):
    """A term or action was built from invalid pieces."""


def _check_ident(name: str, role: str) -> None:
    if not isinstance(name, str) or not _IDENT.match(name):
        raise IllFormed(f"{role} {name!r} is not an identifier")


@dataclass(frozen=True)
class Action:
    """A send (ab!x) or receive (ab?x) of message type msg from source to target."""

    kind: str
    source: str
    target: str
    msg: str

    def __post_init__(self) -> None:
        if self.kind not in (SEND, RECV):
            raise IllFormed(f"unknown action kind {self.kind!r}")
        _check_ident(self.source, "participant")
        _check_ident(self.target, "participant")
        _check_ident(self.msg, "message type")
        if self.source == self.target:
            raise IllFormed(f"participant {self.source!r} cannot message itself")

    @property
    def subject(self) -> str:
        """The acting participant: sender of a send, receiver of a receive."""
        return self.source if self.kind == SEND else self.target

    def sort_key(self) -> tuple[str, str, str, str]:
        return (self.source, self.target, self.kind, self.msg)

    def __str__(self) -> str:
        mark = "!" if self.kind == SEND else "?"
        return f"{self.source}{self.target}{mark}{self.msg}"


def send(source: str, target: str, msg: str) -> Action:
    return Action(SEND, source, target, msg)


def recv(source: str, target: str, msg: str) -> Action:
    return Action(RECV, source, target, msg)


class Chor:
    """Base class for choreography terms; equality is plain structural equality."""

    __slots__ = ()

    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True, repr=False)
class Skip(Chor):
    """The empty choreography, written 0."""

    def __repr__(self) -> str:
        return "Skip()"


@dataclass(frozen=True, repr=False)
class Interaction(Chor):
    """An asynchronous communication a->b:x, not yet started."""

    source: str
    target: str
    msg: str

    def __post_init__(self) -> None:
        _check_ident(self.source, "participant")
        _check_ident(self.target, "participant")
        _check_ident(self.msg, "message type")
        if self.source == self.target:
            raise IllFormed(f"participant {self.source!r} cannot message itself")

    def send_action(self) -> Action:
        return Action(SEND, self.source, self.target, self.msg)

    def recv_action(self) -> Action:
        return Action(RECV, self.source, self.target, self.msg)

    def __repr__(self) -> str:
        return f"Interaction({self.source!r}, {self.target!r}, {self.msg!r})"


@dataclass(frozen=True, repr=False)
class PendingReceive(Chor):
    """A message in flight: sent by source, not yet received by target."""

    source: str
    target: str
    msg: str

    def __post_init__(self) -> None:
        _check_ident(self.source, "participant")
        _check_ident(self.target, "participant")
        _check_ident(self.msg, "message type")
        if self.source == self.target:
            raise IllFormed(f"participant {self.source!r} cannot message itself")

    def recv_action(self) -> Action:
        return Action(RECV, self.source, self.target, self.msg)

    def __repr__(self) -> str:
        return f"PendingReceive({self.source!r}, {self.target!r}, {self.msg!r})"


@dataclass(frozen=True, repr=False)
class Seq(Chor):
    """Weak sequential composition: second may start early for unconstrained subjects."""

    first: Chor
    second: Chor

    def __repr__(self) -> str:
        return f"Seq({self.first!r}, {self.second!r})"


@dataclass(frozen=True, repr=False)
class Par(Chor):
    """Parallel composition."""

    left: Chor
    right: Chor

    def __repr__(self) -> str:
        return f"Par({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Choice(Chor):
    """Nondeterministic choice; the first step resolves it."""

    left: Chor
    right: Chor

    def __repr__(self) -> str:
        return f"Choice({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Loop(Chor):
    """Zero or more repetitions of the body."""

    body: Chor

    def __repr__(self) -> str:
        return f"Loop({self.body!r})"


def subterms(c: Chor) -> Iterator[Chor]:
    """c and every nested term, pre-order."""
    yield c
    if isinstance(c, Seq):
        yield from subterms(c.first)
        yield from subterms(c.second)
    elif isinstance(c, (Par, Choice)):
        yield from subterms(c.left)
        yield from subterms(c.right)
    elif isinstance(c, Loop):
        yield from subterms(c.body)


def participants(c: Chor) -> frozenset[str]:
    """Every participant named anywhere in c."""
    out: set[str] = set()
    for sub in subterms(c):
        if isinstance(sub, (Interaction, PendingReceive)):
            out.add(sub.source)
            out.add(sub.target)
    return frozenset(out)


def interaction_count(c: Chor) -> int:
    return sum(1 for sub in subterms(c) if isinstance(sub, Interaction))


def has_loop(c: Chor) -> bool:
    return any(isinstance(sub, Loop) for sub in subterms(c))


# Precedence levels for printing: + loosest, then ||, then ;, then atoms/loops.
_CHOICE, _PAR, _SEQ, _ATOM = 0, 1, 2, 3


def pretty(c: Chor) -> str:
    """Render with minimal parentheses under the grammar's precedence."""
    return _render(c, _CHOICE)


def _render(c: Chor, level: int) -> str:
    if isinstance(c, Skip):
        return "0"
    if isinstance(c, Interaction):
        return f"{c.source}->{c.target}:{c.msg}"
    if isinstance(c, PendingReceive):
        # the grammar takes two separate identifiers before "?"
        return f"{c.source} {c.target}?{c.msg}"
    if isinstance(c, Loop):
        body = _render(c.body, _ATOM)
        if isinstance(c.body, (Interaction, PendingReceive)):
            # a->b:x* would parse fine but reads as a starred message
            body = f"({body})"
        return body + "*"
    if isinstance(c, Seq):
        text = f"{_render(c.first, _SEQ)} ; {_render(c.second, _SEQ + 1)}"
        mine = _SEQ
    elif isinstance(c, Par):
        text = f"{_render(c.left, _PAR)} || {_render(c.right, _PAR + 1)}"
        mine = _PAR
    else:
        assert isinstance(c, Choice)
        text = f"{_render(c.left, _CHOICE)} + {_render(c.right, _CHOICE + 1)}"
        mine = _CHOICE
    return f"({text})" if mine < level else text
