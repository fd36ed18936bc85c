"""Branching pomsets: events in a tree of binary choices over a dependency DAG.

The structure stores the direct (generating) dependency relation, never its
transitive closure: firing restricts the stored relation to surviving events,
and restricting a closed relation would manufacture orderings that the
surviving events no longer justify.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Union

from .chor import Action

log = logging.getLogger(__name__)

DUPLICATE_EVENT = "DuplicateEvent"
LEAF_MISMATCH = "LeafMismatch"
CYCLIC_DEPS = "CyclicDeps"
PARTIAL_LABELING = "PartialLabeling"


class InvariantViolation(ValueError):
    """A pomset invariant failed; kind names the first violated one."""

    def __init__(self, kind: str, message: str):
        self.kind = kind
        super().__init__(f"{kind}: {message}")


class CannotEnable(Exception):
    """The event has an irremovable strict predecessor."""


class BudgetExceeded(Exception):
    """An enumeration outgrew its configured bound."""

    def __init__(self, message: str, partial: int = 0):
        self.partial = partial
        super().__init__(message)


Child = Union[int, "ChoiceNode"]


@dataclass(frozen=True, eq=False, repr=False)
class BranchNode:
    """An unordered collection of events and choices.

    Children keep insertion order for display; equality and hashing are
    order-insensitive, and structurally equal children are deduplicated.
    """

    children: tuple[Child, ...]

    def __post_init__(self) -> None:
        seen: set = set()
        kept: list[Child] = []
        for child in self.children:
            key = _child_key(child)
            if key not in seen:
                seen.add(key)
                kept.append(child)
        object.__setattr__(self, "children", tuple(kept))
        object.__setattr__(self, "_key", ("n", tuple(sorted(seen))))

    @property
    def key(self):
        return self._key  # type: ignore[attr-defined]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BranchNode) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"BranchNode({self.children!r})"


@dataclass(frozen=True, eq=False, repr=False)
class ChoiceNode:
    """A binary choice between two branch structures; compares as an unordered pair."""

    left: BranchNode
    right: BranchNode

    def __post_init__(self) -> None:
        pair = tuple(sorted((self.left.key, self.right.key)))
        object.__setattr__(self, "_key", ("c", pair))

    @property
    def key(self):
        return self._key  # type: ignore[attr-defined]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ChoiceNode) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"ChoiceNode({self.left!r}, {self.right!r})"


def _child_key(child: Child):
    if isinstance(child, int):
        return ("e", child)
    return child.key


def branch(*children: Child) -> BranchNode:
    return BranchNode(tuple(children))


EMPTY_BRANCH = BranchNode(())


def leaves(node: BranchNode) -> list[int]:
    """Event ids in the structure, duplicates preserved (pre-validation)."""
    out: list[int] = []
    _collect_leaves(node, out)
    return out


def _collect_leaves(node: BranchNode, out: list[int]) -> None:
    for child in node.children:
        if isinstance(child, int):
            out.append(child)
        else:
            _collect_leaves(child.left, out)
            _collect_leaves(child.right, out)


@dataclass(frozen=True, eq=False, repr=False)
class BranchingPomset:
    """Events, direct dependencies, labels, and the branching structure."""

    events: frozenset[int]
    deps: frozenset[tuple[int, int]]
    labels: Mapping[int, Action]
    branching: BranchNode

    def __post_init__(self) -> None:
        label_part = tuple(sorted((e, a.sort_key()) for e, a in self.labels.items()))
        key = (tuple(sorted(self.events)), tuple(sorted(self.deps)),
               label_part, self.branching.key)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_dep_targets", frozenset(t for _, t in self.deps))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BranchingPomset) and self._key == other._key  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash(self._key)  # type: ignore[attr-defined]

    def __repr__(self) -> str:
        return (f"BranchingPomset(events={sorted(self.events)}, "
                f"deps={sorted(self.deps)}, branching={self.branching!r})")

    # ------------------------------------------------------------- validation

    def validate(self) -> None:
        """Raise InvariantViolation naming the first broken invariant."""
        lvs = leaves(self.branching)
        if len(lvs) != len(set(lvs)):
            dup = sorted(e for e in set(lvs) if lvs.count(e) > 1)
            raise InvariantViolation(DUPLICATE_EVENT,
                                     f"events {dup} occur more than once")
        if set(lvs) != self.events:
            raise InvariantViolation(
                LEAF_MISMATCH,
                f"leaves {sorted(set(lvs))} != events {sorted(self.events)}")
        dangling = sorted({e for pair in self.deps for e in pair} - self.events)
        if dangling:
            raise InvariantViolation(
                CYCLIC_DEPS, f"dependencies mention unknown events {dangling}")
        if self._has_cycle():
            raise InvariantViolation(CYCLIC_DEPS,
                                     "dependency closure is not a partial order")
        if set(self.labels) != self.events:
            raise InvariantViolation(PARTIAL_LABELING,
                                     "labels are not total on events")

    def _has_cycle(self) -> bool:
        succs: dict[int, list[int]] = {}
        indeg: dict[int, int] = {e: 0 for e in self.events}
        for s, t in self.deps:
            succs.setdefault(s, []).append(t)
            indeg[t] += 1
        ready = [e for e, d in indeg.items() if d == 0]
        seen = 0
        while ready:
            e = ready.pop()
            seen += 1
            for t in succs.get(e, ()):
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
        return seen != len(self.events)

    # ------------------------------------------------------------- queries

    def active_minimal(self) -> frozenset[int]:
        """Root-level events with no strict predecessor among surviving events.

        An event has a strict predecessor under the closure iff it has a
        direct one: every closure path ends in a stored pair.
        """
        return frozenset(ch for ch in self.branching.children
                         if isinstance(ch, int) and ch not in self._dep_targets)  # type: ignore[attr-defined]

    def closure_preds(self) -> dict[int, frozenset[int]]:
        """Strict predecessors of every event under the transitive closure."""
        direct: dict[int, list[int]] = {e: [] for e in self.events}
        for s, t in self.deps:
            direct[t].append(s)
        memo: dict[int, frozenset[int]] = {}

        def preds(e: int) -> frozenset[int]:
            got = memo.get(e)
            if got is None:
                acc: set[int] = set()
                for p in direct[e]:
                    acc.add(p)
                    acc |= preds(p)
                got = frozenset(acc)
                memo[e] = got
            return got

        for e in self.events:
            preds(e)
        return memo

    def terminates(self) -> bool:
        """True iff every event is avoidable: the structure can refine to nothing."""
        return _vanishes(self.branching)

    # ------------------------------------------------------------- operations

    def restrict(self, node: BranchNode) -> BranchingPomset:
        """Keep only the events of node; deps are restricted, never closed first."""
        keep = set(leaves(node))
        assert keep <= self.events, "restriction must not invent events"
        return BranchingPomset(
            frozenset(keep),
            frozenset(p for p in self.deps if p[0] in keep and p[1] in keep),
            {e: self.labels[e] for e in keep},
            node)

    def remove_event(self, e: int) -> BranchingPomset:
        """Delete a fired event; only root-level events are ever fired."""
        assert e in self.events
        assert e in self.branching.children, "only root-level events are removed"
        return self.restrict(_drop_event(self.branching, e))

    def enable(self, e: int) -> "BranchingPomset":
        """The least refinement making e active-minimal, or CannotEnable.

        Choices on the path to e resolve toward e; each direct predecessor of
        e must then be discarded by resolving a choice, keeping a choice over
        both branches whenever both can be cleaned.
        """
        assert e in self.events
        if e in self.active_minimal():
            return self
        node = _hoist(self.branching, e)
        preds = frozenset(s for s, t in self.deps if t == e)
        cleaned = _discard(node, preds)
        if cleaned is None:
            raise CannotEnable(f"event {e} has an irremovable predecessor")
        out = self.restrict(cleaned)
        assert e in out.active_minimal()
        return out

    def fire(self, e: int) -> "BranchingPomset":
        """Enable e, then remove it."""
        return self.enable(e).remove_event(e)

    def enabled_events(self) -> frozenset[int]:
        """Events that some refinement makes active-minimal."""
        out: list[int] = []
        for e in self.events:
            try:
                self.enable(e)
            except CannotEnable:
                continue
            out.append(e)
        return frozenset(out)

    # ------------------------------------------------------------- enumeration

    def all_refinements(self, max_leaves: int = 32) -> frozenset["BranchingPomset"]:
        """Every refinement of the branching structure, as restricted pomsets."""
        return frozenset(self.restrict(b)
                         for b in node_refinements(self.branching, max_leaves))

    def complete_resolutions(self, max_leaves: int = 32) -> frozenset["BranchingPomset"]:
        """Refinements whose structure has no choice left."""
        if len(leaves(self.branching)) > max_leaves:
            raise BudgetExceeded(f"structure exceeds {max_leaves} leaves")
        return frozenset(self.restrict(b) for b in _resolutions(self.branching))

    def linearisations(self, max_count: int = 10 ** 6) -> frozenset[tuple[Action, ...]]:
        """Label sequences of all runs firing down to a terminated residue."""
        memo: dict[BranchingPomset, frozenset[tuple[Action, ...]]] = {}

        def suffixes(r: BranchingPomset) -> frozenset[tuple[Action, ...]]:
            got = memo.get(r)
            if got is None:
                acc: set[tuple[Action, ...]] = set()
                if r.terminates():
                    acc.add(())
                for e in r.enabled_events():
                    head = r.labels[e]
                    for tail in suffixes(r.fire(e)):
                        acc.add((head,) + tail)
                if len(acc) > max_count:
                    raise BudgetExceeded(
                        f"more than {max_count} linearisations", partial=len(acc))
                got = frozenset(acc)
                memo[r] = got
            return got

        return suffixes(self)

    # ------------------------------------------------------------- serialization

    def to_json(self) -> dict:
        return {
            "events": [{"id": e, "label": label_to_json(self.labels[e])}
                       for e in sorted(self.events)],
            "deps": [[s, t] for s, t in sorted(self.deps)],
            "branching": _node_to_json(self.branching),
        }


def label_to_json(a: Action) -> dict:
    return {"kind": a.kind, "from": a.source, "to": a.target, "msg": a.msg}


def label_from_json(data: dict) -> Action:
    try:
        return Action(data["kind"], data["from"], data["to"], data["msg"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad label object: {data!r}") from exc


def _node_to_json(node: BranchNode) -> dict:
    children = []
    for child in node.children:
        if isinstance(child, int):
            children.append({"type": "event", "id": child})
        else:
            children.append({"type": "choice",
                             "branches": [_node_to_json(child.left),
                                          _node_to_json(child.right)]})
    return {"type": "node", "children": children}


def _node_from_json(data: dict) -> BranchNode:
    if not isinstance(data, dict) or data.get("type") != "node":
        raise ValueError(f"bad branching node: {data!r}")
    children: list[Child] = []
    for child in data.get("children", ()):
        kind = isinstance(child, dict) and child.get("type")
        if kind == "event":
            children.append(int(child["id"]))
        elif kind == "choice":
            branches = child.get("branches", ())
            if len(branches) != 2:
                raise ValueError("choice needs exactly two branches")
            children.append(ChoiceNode(_node_from_json(branches[0]),
                                       _node_from_json(branches[1])))
        else:
            raise ValueError(f"bad branching child: {child!r}")
    return BranchNode(tuple(children))


def from_json(data: dict) -> BranchingPomset:
    """Parse and validate the JSON form."""
    try:
        events = frozenset(int(entry["id"]) for entry in data["events"])
        labels = {int(entry["id"]): label_from_json(entry["label"])
                  for entry in data["events"]}
        deps = frozenset((int(s), int(t)) for s, t in data["deps"])
        branching = _node_from_json(data["branching"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad pomset JSON: {exc}") from exc
    pom = BranchingPomset(events, deps, labels, branching)
    pom.validate()
    return pom


# ----------------------------------------------------------------- structure ops


def _vanishes(node: BranchNode) -> bool:
    # a structure refines to nothing iff every child is a choice with a
    # vanishing branch; bare events cannot be discarded
    return all(isinstance(ch, ChoiceNode) and (_vanishes(ch.left) or _vanishes(ch.right))
               for ch in node.children)


def _drop_event(node: BranchNode, e: int) -> BranchNode:
    kids: list[Child] = []
    for child in node.children:
        if isinstance(child, int):
            if child != e:
                kids.append(child)
        else:
            kids.append(ChoiceNode(_drop_event(child.left, e),
                                   _drop_event(child.right, e)))
    return BranchNode(tuple(kids))


def _hoist(node: BranchNode, e: int) -> BranchNode:
    """Resolve every choice on the path to e toward e's side, splicing it up."""
    kids: list[Child] = []
    for child in node.children:
        if isinstance(child, ChoiceNode):
            if e in leaves(child.left):
                kids.extend(_hoist(child.left, e).children)
                continue
            if e in leaves(child.right):
                kids.extend(_hoist(child.right, e).children)
                continue
        kids.append(child)
    return BranchNode(tuple(kids))


def _discard(node: BranchNode, bad: frozenset[int]):
    """Clean bad events out of node, resolving choices only when forced.

    Returns the cleaned node, or None when a bad event is irremovable here.
    """
    kids: list[Child] = []
    for child in node.children:
        if isinstance(child, int):
            if child in bad:
                return None
            kids.append(child)
        else:
            left = _discard(child.left, bad)
            right = _discard(child.right, bad)
            if left is not None and right is not None:
                kids.append(ChoiceNode(left, right))
            elif left is not None:
                kids.extend(left.children)
            elif right is not None:
                kids.extend(right.children)
            else:
                return None
    return BranchNode(tuple(kids))


# ----------------------------------------------------------------- refinement


def node_refinements(node: BranchNode, max_leaves: int = 32) -> frozenset[BranchNode]:
    """Every structure reachable by resolving choices and refining branches."""
    if len(leaves(node)) > max_leaves:
        raise BudgetExceeded(f"structure exceeds {max_leaves} leaves")
    return _refinements(node)


@lru_cache(maxsize=None)
def _refinements(node: BranchNode) -> frozenset[BranchNode]:
    per_child: list[tuple[tuple[Child, ...], ...]] = []
    for child in node.children:
        if isinstance(child, int):
            per_child.append(((child,),))
            continue
        left = _refinements(child.left)
        right = _refinements(child.right)
        options: list[tuple[Child, ...]] = [
            (ChoiceNode(l, r),) for l in left for r in right]  # keep the choice
        options.extend(tuple(b.children) for b in left | right)  # resolve it
        per_child.append(tuple(dict.fromkeys(options)))
    out = set()
    for combo in itertools.product(*per_child):
        out.add(BranchNode(tuple(itertools.chain.from_iterable(combo))))
    return frozenset(out)


def refines(b1: BranchNode, b2: BranchNode, max_leaves: int = 32) -> bool:
    """True iff b2 is reachable from b1 by the refinement rules (memoized search)."""
    if len(leaves(b1)) > max_leaves:
        raise BudgetExceeded(f"structure exceeds {max_leaves} leaves")
    return b2 in _refinements(b1)


def _resolutions(node: BranchNode) -> frozenset[BranchNode]:
    per_child: list[tuple[tuple[Child, ...], ...]] = []
    for child in node.children:
        if isinstance(child, int):
            per_child.append(((child,),))
        else:
            options = [tuple(b.children)
                       for side in (child.left, child.right)
                       for b in _resolutions(side)]
            per_child.append(tuple(dict.fromkeys(options)))
    out = set()
    for combo in itertools.product(*per_child):
        out.add(BranchNode(tuple(itertools.chain.from_iterable(combo))))
    return frozenset(out)


# ----------------------------------------------------------------- oracles


def oracle_enabling_refinements(r: BranchingPomset,
                                e: int,
                                max_leaves: int = 32) -> list[BranchingPomset]:
    """The maximal refinements that make e active-minimal (brute force).

    Ground truth for enable(): enable succeeds iff this list is non-empty,
    and its result must appear here. More than one maximum is legal but
    unexpected; it is logged, not failed.
    """
    enabling = [ref for ref in r.all_refinements(max_leaves)
                if e in ref.active_minimal()]
    maxima = [ref for ref in enabling
              if not any(other != ref and refines(other.branching, ref.branching)
                         for other in enabling)]
    if len(maxima) > 1:
        log.warning("event %d has %d incomparable maximal enabling refinements",
                    e, len(maxima))
    return maxima
