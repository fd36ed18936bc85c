"""Choreographies as branching pomsets: syntax, semantics, encoding, tools."""

from .chor import (Action, Choice, Chor, IllFormed, Interaction, Loop, Par,
                   PendingReceive, Seq, Skip, interaction_count, participants,
                   pretty, recv, send, subterms)
from .parser import ParseError, PendingNotAllowed, SelfCommunication, parse
from .semantics import (ChorStep, LoopVerdict, is_dependently_guarded,
                        loop_verdicts, partial_terminate, steps, terminates)
from .pomset import (BranchingPomset, BranchNode, BudgetExceeded, CannotEnable,
                     ChoiceNode, EMPTY_BRANCH, InvariantViolation, branch,
                     from_json, label_from_json, label_to_json, leaves,
                     node_refinements, refines)
from .encode import (EMPTY_POMSET, EncodeConfig, LoopsUnsupported,
                     choice_compose, encode, par_compose, seq_compose,
                     unfold_loops)
from .render import to_dot
from .lts import (BisimReport, Exploded, Lts, bisimilar, build_chor_lts,
                  build_pom_lts, chor_bisim_bounded, completed_chor_traces,
                  trace_equivalent)
from .session import NotEnabled, StepMismatch, StepSession
from .server import create_app

__version__ = "0.1.0"

__all__ = [
    "Action", "BisimReport", "BranchNode", "BranchingPomset", "BudgetExceeded",
    "CannotEnable", "Choice", "ChoiceNode", "Chor", "ChorStep", "EMPTY_BRANCH",
    "EMPTY_POMSET", "EncodeConfig", "Exploded", "IllFormed", "Interaction", "Lts",
    "InvariantViolation", "Loop", "LoopVerdict", "LoopsUnsupported",
    "NotEnabled", "Par", "ParseError", "PendingNotAllowed", "PendingReceive",
    "SelfCommunication", "Seq", "Skip", "StepMismatch", "StepSession",
    "bisimilar", "branch", "build_chor_lts", "build_pom_lts",
    "chor_bisim_bounded", "choice_compose", "completed_chor_traces",
    "create_app", "encode", "from_json", "interaction_count",
    "is_dependently_guarded", "label_from_json", "label_to_json", "leaves",
    "loop_verdicts", "node_refinements", "par_compose", "parse",
    "partial_terminate", "participants", "pretty", "recv", "refines", "send",
    "seq_compose", "steps", "subterms", "terminates", "to_dot",
    "trace_equivalent", "unfold_loops",
]
