"""Paired stepping of a choreography and its encoded pomset.

A session fires pomset events; the choreography residual follows by label.
Keeping both residuals bisimilar at every step is exactly the soundness
statement of the encoding, so the session asserts it can always follow.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from typing import Optional

from .chor import Action, Chor, pretty
from .encode import encode, unfold_loops
from .lts import bisimilar, build_chor_lts, build_pom_lts
from .pomset import BranchingPomset, CannotEnable, label_to_json
from . import semantics


class NotEnabled(Exception):
    """The requested event cannot currently fire."""


class StepMismatch(Exception):
    """The choreography cannot follow a fired pomset event; a library bug."""


@dataclass
class StepSession:
    id: str
    source: Chor
    chor_state: Chor
    pom_state: BranchingPomset
    history: list[tuple[int, Action]] = field(default_factory=list)

    @classmethod
    def create(cls, term: Chor, unfold_depth: Optional[int] = None,
               session_id: Optional[str] = None) -> "StepSession":
        """Start a session; loops are rejected unless a depth is given."""
        source = term if unfold_depth is None else unfold_loops(term, unfold_depth)
        return cls(id=session_id or uuid.uuid4().hex,
                   source=source,
                   chor_state=source,
                   pom_state=encode(source))

    def enabled(self) -> list[tuple[int, Action]]:
        return [(e, self.pom_state.labels[e])
                for e in sorted(self.pom_state.enabled_events())]

    def terminated(self) -> bool:
        done = self.pom_state.terminates()
        assert done == semantics.terminates(self.chor_state), \
            "termination disagreement between residuals"
        return done

    def fire(self, event: int) -> None:
        if event not in self.pom_state.events:
            raise NotEnabled(f"no event {event} in the current state")
        label = self.pom_state.labels[event]
        try:
            nxt_pom = self.pom_state.fire(event)
        except CannotEnable as exc:
            raise NotEnabled(f"event {event} ({label}) is not enabled") from exc
        self.chor_state = _follow(self.chor_state, label, nxt_pom)
        self.pom_state = nxt_pom
        self.history.append((event, label))
        assert self._replay_matches(), "history replay diverged"

    def fire_label(self, text: str) -> int:
        """Fire the unique enabled event whose label prints as `text`."""
        hits = [e for e, lbl in self.enabled() if str(lbl) == text]
        if not hits:
            raise NotEnabled(f"no enabled event labelled {text}")
        if len(hits) > 1:
            raise NotEnabled(
                f"label {text} is ambiguous here (events {hits}); fire by id")
        self.fire(hits[0])
        return hits[0]

    def reset(self) -> None:
        self.chor_state = self.source
        self.pom_state = encode(self.source)
        self.history.clear()

    def payload(self) -> dict:
        return {
            "id": self.id,
            "state": self.pom_state.to_json(),
            "chor": pretty(self.chor_state),
            "enabled": [{"event": e, "label": label_to_json(lbl)}
                        for e, lbl in self.enabled()],
            "terminated": self.terminated(),
        }

    def _replay_matches(self) -> bool:
        chor, pom = self.source, encode(self.source)
        for event, label in self.history:
            assert pom.labels[event] == label
            nxt = pom.fire(event)
            chor = _follow(chor, label, nxt)
            pom = nxt
        return chor == self.chor_state and pom == self.pom_state


def _follow(chor: Chor, label: Action, target_pom: BranchingPomset) -> Chor:
    """Deterministically pick the choreography step matching a fired event.

    With several same-labelled steps the event id has resolved a choice the
    term leaves open, so pick the (unique up to bisimilarity) candidate whose
    encoding matches the pomset residual.
    """
    candidates = sorted({st.target for st in semantics.steps(chor)
                         if st.label == label}, key=pretty)
    if not candidates:
        raise StepMismatch(f"choreography {pretty(chor)!r} has no step {label}")
    if len(candidates) == 1:
        return candidates[0]
    pom_lts = build_pom_lts(target_pom)
    for cand in candidates:
        if bisimilar(build_chor_lts(cand), pom_lts).bisimilar:
            return cand
    raise StepMismatch(
        f"no step of {pretty(chor)!r} labelled {label} matches the pomset")
