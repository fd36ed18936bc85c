"""Explicit transition systems, bisimulation checking, trace comparison."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Optional

from .chor import Action, Chor, pretty
from .pomset import BranchingPomset, label_to_json
from . import semantics

MISSING_STEP = "MissingStep"
TERMINATION_MISMATCH = "TerminationMismatch"


class Exploded(Exception):
    """State exploration hit its bound."""

    def __init__(self, bound: int):
        self.bound = bound
        super().__init__(f"exploration exceeded {bound} states")


@dataclass
class Lts:
    """States are indexed; structurally equal underlying states share an index."""

    states: list
    initial: int
    transitions: frozenset[tuple[int, Action, int]]
    terminating: frozenset[int]
    dumps: tuple[str, ...]

    def successors(self) -> dict[int, dict[Action, frozenset[int]]]:
        out: dict[int, dict[Action, set[int]]] = {i: {} for i in range(len(self.states))}
        for src, label, tgt in self.transitions:
            out[src].setdefault(label, set()).add(tgt)
        return {i: {lbl: frozenset(ts) for lbl, ts in per.items()}
                for i, per in out.items()}

    def to_json(self) -> dict:
        return {
            "states": list(self.dumps),
            "initial": self.initial,
            "transitions": [[s, label_to_json(lbl), t]
                            for s, lbl, t in sorted(
                                self.transitions,
                                key=lambda tr: (tr[0], tr[1].sort_key(), tr[2]))],
            "terminating": sorted(self.terminating),
        }


def _explore(initial: Hashable,
             moves: Callable[[Hashable], Iterable[tuple[Action, Hashable]]],
             final: Callable[[Hashable], bool],
             dump: Callable[[Hashable], str],
             bound: int) -> Lts:
    index: dict[Hashable, int] = {initial: 0}
    states: list = [initial]
    transitions: set[tuple[int, Action, int]] = set()
    terminating: set[int] = set()
    queue = [initial]
    while queue:
        state = queue.pop(0)
        src = index[state]
        if final(state):
            terminating.add(src)
        for label, target in moves(state):
            tgt = index.get(target)
            if tgt is None:
                tgt = len(states)
                if tgt >= bound:
                    raise Exploded(bound)
                index[target] = tgt
                states.append(target)
                queue.append(target)
            transitions.add((src, label, tgt))
    return Lts(states, 0, frozenset(transitions), frozenset(terminating),
               tuple(dump(s) for s in states))


def build_chor_lts(c: Chor, bound: int = 100_000) -> Lts:
    """Exhaustive exploration of the reduction relation from c."""

    def moves(term: Chor):
        return sorted(((st.label, st.target) for st in semantics.steps(term)),
                      key=lambda mv: (mv[0].sort_key(), pretty(mv[1])))

    return _explore(c, moves, semantics.terminates, pretty, bound)


def build_pom_lts(r: BranchingPomset, bound: int = 100_000) -> Lts:
    """Exhaustive exploration of the firing relation from r."""

    def moves(pom: BranchingPomset):
        return [(pom.labels[e], pom.fire(e)) for e in sorted(pom.enabled_events())]

    def dump(pom: BranchingPomset) -> str:
        return "{" + ", ".join(str(pom.labels[e]) for e in sorted(pom.events)) + "}"

    return _explore(r, moves, BranchingPomset.terminates, dump, bound)


@dataclass
class BisimReport:
    """Outcome of a bisimilarity check between two systems."""

    bisimilar: bool
    relation: Optional[frozenset[tuple[int, int]]] = None
    trace: Optional[tuple[Action, ...]] = None
    verdict: Optional[str] = None


def bisimilar(l1: Lts, l2: Lts) -> BisimReport:
    """Partition refinement over the disjoint union, with termination matching.

    On failure the report carries a shortest distinguishing experiment: the
    trace of attacker moves, ending either at a step one side cannot match
    (MissingStep) or at a pair disagreeing on termination (TerminationMismatch).
    """
    nodes = [(0, i) for i in range(len(l1.states))] + \
            [(1, j) for j in range(len(l2.states))]
    succs1 = l1.successors()
    succs2 = l2.successors()

    def succ(node):
        side, i = node
        per = succs1[i] if side == 0 else succs2[i]
        return {lbl: frozenset((side, t) for t in ts) for lbl, ts in per.items()}

    trans = {n: succ(n) for n in nodes}
    term = {n: (n[1] in (l1.terminating if n[0] == 0 else l2.terminating))
            for n in nodes}

    block = {n: (1 if term[n] else 0) for n in nodes}
    history = [dict(block)]
    while True:
        sigs: dict[tuple, int] = {}
        new_block: dict = {}
        for n in nodes:
            sig = (block[n], tuple(sorted(
                (lbl.sort_key(), tuple(sorted({block[t] for t in ts})))
                for lbl, ts in trans[n].items())))
            bid = sigs.setdefault(sig, len(sigs))
            new_block[n] = bid
        if len(sigs) == len(set(block.values())):
            break
        block = new_block
        history.append(dict(block))

    p0, q0 = (0, l1.initial), (1, l2.initial)
    if block[p0] == block[q0]:
        by_block: dict[int, tuple[list[int], list[int]]] = {}
        for (side, i), b in block.items():
            by_block.setdefault(b, ([], []))[side].append(i)
        relation = frozenset((i, j) for ones, twos in by_block.values()
                             for i in ones for j in twos)
        return BisimReport(True, relation=relation)

    trace, verdict = _experiment(p0, q0, trans, history)
    return BisimReport(False, trace=tuple(trace), verdict=verdict)


def _separation_round(p, q, history) -> Optional[int]:
    for r, blocks in enumerate(history):
        if blocks[p] != blocks[q]:
            return r
    return None


def _experiment(p, q, trans, history):
    """Walk the refinement rounds backwards, forcing the separation level down."""
    trace: list[Action] = []
    while True:
        r = _separation_round(p, q, history)
        assert r is not None, "experiment requested for equivalent states"
        if r == 0:
            return trace, TERMINATION_MISMATCH
        prev = history[r - 1]
        for attacker, defender in ((p, q), (q, p)):
            for label in sorted(trans[attacker], key=Action.sort_key):
                att_blocks = {prev[t] for t in trans[attacker][label]}
                def_succs = trans[defender].get(label, frozenset())
                def_blocks = {prev[t] for t in def_succs}
                extra = att_blocks - def_blocks
                if not extra:
                    continue
                target_block = min(extra)
                p2 = min(t for t in trans[attacker][label]
                         if prev[t] == target_block)
                trace.append(label)
                if not def_succs:
                    return trace, MISSING_STEP
                q2 = min(def_succs)
                p, q = p2, q2
                break
            else:
                continue
            break
        else:
            raise AssertionError("separated pair with no distinguishing move")


def completed_lts_traces(lts: Lts, max_len: int) -> frozenset[tuple[Action, ...]]:
    """Label sequences of length <= max_len ending in a terminating state."""
    succs = lts.successors()
    memo: dict[tuple[int, int], frozenset[tuple[Action, ...]]] = {}

    def go(state: int, budget: int) -> frozenset[tuple[Action, ...]]:
        key = (state, budget)
        got = memo.get(key)
        if got is None:
            acc: set[tuple[Action, ...]] = set()
            if state in lts.terminating:
                acc.add(())
            if budget > 0:
                for label, targets in succs[state].items():
                    for t in targets:
                        for tail in go(t, budget - 1):
                            acc.add((label,) + tail)
            got = frozenset(acc)
            memo[key] = got
        return got

    return go(lts.initial, max_len)


def prefix_lts_traces(lts: Lts, max_len: int) -> frozenset[tuple[Action, ...]]:
    """All label sequences of length <= max_len executable from the start."""
    succs = lts.successors()
    memo: dict[tuple[int, int], frozenset[tuple[Action, ...]]] = {}

    def go(state: int, budget: int) -> frozenset[tuple[Action, ...]]:
        key = (state, budget)
        got = memo.get(key)
        if got is None:
            acc: set[tuple[Action, ...]] = {()}
            if budget > 0:
                for label, targets in succs[state].items():
                    for t in targets:
                        for tail in go(t, budget - 1):
                            acc.add((label,) + tail)
            got = frozenset(acc)
            memo[key] = got
        return got

    return go(lts.initial, max_len)


def trace_equivalent(l1: Lts, l2: Lts, max_len: int) -> bool:
    """Equal completed-trace sets and equal prefix languages up to max_len."""
    return (prefix_lts_traces(l1, max_len) == prefix_lts_traces(l2, max_len)
            and completed_lts_traces(l1, max_len) == completed_lts_traces(l2, max_len))


def completed_chor_traces(c: Chor, max_len: Optional[int] = None
                          ) -> frozenset[tuple[Action, ...]]:
    """Completed traces straight off the reduction relation.

    Without max_len the term must be loop-free (the recursion is then finite).
    """
    from .chor import has_loop
    if max_len is None and has_loop(c):
        raise ValueError("loops need a max trace length")
    memo: dict = {}

    def go(term: Chor, budget: Optional[int]) -> frozenset[tuple[Action, ...]]:
        key = (term, budget)
        got = memo.get(key)
        if got is None:
            acc: set[tuple[Action, ...]] = set()
            if semantics.terminates(term):
                acc.add(())
            if budget is None or budget > 0:
                nxt = None if budget is None else budget - 1
                for st in semantics.steps(term):
                    for tail in go(st.target, nxt):
                        acc.add((st.label,) + tail)
            got = frozenset(acc)
            memo[key] = got
        return got

    return go(c, max_len)


def _grouped_steps(term: Chor) -> dict[Action, frozenset[Chor]]:
    per: dict[Action, set[Chor]] = {}
    for st in semantics.steps(term):
        per.setdefault(st.label, set()).add(st.target)
    return {lbl: frozenset(ts) for lbl, ts in per.items()}


def chor_bisim_bounded(c1: Chor, c2: Chor, rounds: int) -> bool:
    """Bisimulation approximant on terms, explored lazily up to `rounds` moves.

    True whenever the terms are bisimilar; false only on a genuine difference
    observable within the given number of rounds. Identical terms short-circuit,
    and verdicts transfer across budgets (a win at k wins at every k' <= k),
    which keeps the game tractable on loops whose iterations overlap.
    """
    true_upto: dict[tuple[Chor, Chor], int] = {}
    false_from: dict[tuple[Chor, Chor], int] = {}

    def game(p: Chor, q: Chor, k: int) -> bool:
        if p == q:
            return True
        if semantics.terminates(p) != semantics.terminates(q):
            return False
        if k <= 0:
            return True
        key = (p, q)
        if true_upto.get(key, -1) >= k:
            return True
        if false_from.get(key, k + 1) <= k:
            return False
        sp = _grouped_steps(p)
        sq = _grouped_steps(q)
        ok = set(sp) == set(sq)
        if ok:
            for label in sp:
                pts, qts = sp[label], sq[label]
                for p2 in pts:
                    if p2 not in qts and not any(game(p2, q2, k - 1)
                                                 for q2 in qts):
                        ok = False
                        break
                if not ok:
                    break
                for q2 in qts:
                    if q2 not in pts and not any(game(p2, q2, k - 1)
                                                 for p2 in pts):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            true_upto[key] = max(true_upto.get(key, -1), k)
        else:
            false_from[key] = min(false_from.get(key, k + 1), k)
        return ok

    return game(c1, c2, rounds)
