"""DOT rendering of branching pomsets: labelled boxes, nested dashed choice boxes."""

from __future__ import annotations

from .pomset import BranchNode, BranchingPomset, ChoiceNode


def to_dot(r: BranchingPomset, name: str = "bpomset") -> str:
    """Graphviz digraph; arrows are the transitive reduction of the dep closure."""
    lines = [f"digraph {name} {{", "  rankdir=LR;",
             '  node [shape=box, fontname="monospace"];']
    counter = [0]
    _emit(r, r.branching, lines, "  ", counter, dashed=False)
    for s, t in _reduction(r):
        lines.append(f"  e{s} -> e{t};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit(r: BranchingPomset, node: BranchNode, lines: list[str], indent: str,
          counter: list[int], dashed: bool) -> None:
    for child in node.children:
        if isinstance(child, int):
            lines.append(f'{indent}e{child} [label="{r.labels[child]}"];')
        else:
            cid = counter[0]
            counter[0] += 1
            lines.append(f"{indent}subgraph cluster_{cid} {{")
            lines.append(f"{indent}  style=dashed;")
            lines.append(f'{indent}  label="";')
            for side in (child.left, child.right):
                bid = counter[0]
                counter[0] += 1
                lines.append(f"{indent}  subgraph cluster_{bid} {{")
                lines.append(f"{indent}    style=solid; color=gray;")
                _emit(r, side, lines, indent + "    ", counter, dashed=True)
                lines.append(f"{indent}  }}")
            lines.append(f"{indent}}}")


def _reduction(r: BranchingPomset) -> list[tuple[int, int]]:
    preds = r.closure_preds()
    closure = {(p, e) for e, ps in preds.items() for p in ps}
    return sorted((s, t) for s, t in closure
                  if not any((s, m) in closure and (m, t) in closure
                             for m in r.events))
