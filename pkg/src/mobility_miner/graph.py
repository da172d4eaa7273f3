"""Per-user mobility graph: nodes weighted by visit counts, directed edges
weighted by within-day transition counts, optionally annotated with the
mined support of the matching two-step pattern."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .miner import SequentialPattern
from .serialize import canonical_json
from .sessionize import VisitSequence
from .taxonomy import LabeledVisit


class InconsistencyError(ValueError):
    """A session refers to a label that no supplied visit carries."""


@dataclass(frozen=True, slots=True)
class Node:
    label: str
    visit_count: int


@dataclass(frozen=True, slots=True)
class Edge:
    from_label: str
    to_label: str
    transition_count: int
    pattern_support: int | None = None


@dataclass(frozen=True, slots=True)
class MobilityGraph:
    nodes: tuple[Node, ...]  # lexicographic by label
    edges: tuple[Edge, ...]  # lexicographic by (from, to)

    def to_dict(self) -> dict:
        edges = []
        for edge in self.edges:
            payload = {
                "from": edge.from_label,
                "to": edge.to_label,
                "transition_count": edge.transition_count,
            }
            if edge.pattern_support is not None:
                payload["pattern_support"] = edge.pattern_support
            edges.append(payload)
        return {
            "nodes": [{"label": n.label, "visit_count": n.visit_count}
                      for n in self.nodes],
            "edges": edges,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())


def build_graph(visits: Sequence[LabeledVisit],
                sessions: Sequence[VisitSequence],
                patterns: Sequence[SequentialPattern] = ()) -> MobilityGraph:
    """Count node visits from the raw visit stream and edge transitions from
    adjacent within-session pairs; attach the support of any mined two-item
    pattern [u, v] to the matching edge.

    Sessions are trusted to derive from the given visits; a session label
    missing from the visits raises InconsistencyError.
    """
    visit_counts = Counter(v.label for v in visits)
    transitions: Counter[tuple[str, str]] = Counter()
    for session in sessions:
        for label in session.items:
            if label not in visit_counts:
                raise InconsistencyError(
                    f"session label {label!r} has no corresponding visit")
        transitions.update(zip(session.items, session.items[1:]))
    support_by_pair = {p.items: p.support for p in patterns if len(p.items) == 2}
    nodes = tuple(Node(label, visit_counts[label])
                  for label in sorted(visit_counts))
    edges = tuple(
        Edge(src, dst, transitions[(src, dst)], support_by_pair.get((src, dst)))
        for src, dst in sorted(transitions))
    return MobilityGraph(nodes, edges)
