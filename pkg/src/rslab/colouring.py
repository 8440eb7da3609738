"""Edge colourings: positive integer colours on the edges of one graph."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MissingEdgeColourError, RslabError
from .graphs import Edge, Graph, normalise_edge


@dataclass(frozen=True)
class EdgeColouring:
    """Colours stored parallel to `graph.edges`; colours are >= 1."""

    graph: Graph
    colours: tuple[int, ...]

    def __post_init__(self):
        if len(self.colours) != len(self.graph.edges):
            raise MissingEdgeColourError(
                f"{len(self.colours)} colours for {len(self.graph.edges)} edges"
            )
        if any(c < 1 for c in self.colours):
            raise RslabError("colours must be positive integers")
        object.__setattr__(
            self, "_by_edge", dict(zip(self.graph.edges, self.colours))
        )

    @staticmethod
    def from_map(graph: Graph, mapping: dict[Edge, int]) -> "EdgeColouring":
        colours = []
        for e in graph.edges:
            if e not in mapping:
                raise MissingEdgeColourError(f"edge {e} has no colour")
            colours.append(int(mapping[e]))
        if len(mapping) != len(graph.edges):
            raise MissingEdgeColourError("colouring mentions edges not in the graph")
        return EdgeColouring(graph, tuple(colours))

    def colour_of(self, u: int, v: int) -> int:
        e = normalise_edge(u, v)
        try:
            return self._by_edge[e]
        except KeyError:
            raise MissingEdgeColourError(f"edge {e} not in graph") from None

    @property
    def colour_count(self) -> int:
        return len(set(self.colours))

    def classes(self) -> dict[int, tuple[Edge, ...]]:
        out: dict[int, list[Edge]] = {}
        for e, c in zip(self.graph.edges, self.colours):
            out.setdefault(c, []).append(e)
        return {c: tuple(v) for c, v in sorted(out.items())}

    def partition(self) -> frozenset[frozenset[Edge]]:
        """The colour classes with labels forgotten."""
        return frozenset(frozenset(v) for v in self.classes().values())

    def merge(self, c1: int, c2: int) -> "EdgeColouring":
        """Recolour every c2 edge with c1."""
        return EdgeColouring(
            self.graph, tuple(c1 if c == c2 else c for c in self.colours)
        )

    def to_json_dict(self) -> dict:
        d = self.graph.to_json_dict()
        d["colours"] = list(self.colours)
        return d

    @staticmethod
    def from_json_dict(data: dict) -> "EdgeColouring":
        g = Graph.from_json_dict(data)
        return EdgeColouring(g, tuple(int(c) for c in data["colours"]))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.graph.n):
            lines.append(f"  {v};")
        for (u, v), c in zip(self.graph.edges, self.colours):
            lines.append(f'  {u} -- {v} [label="{c}"];')
        lines.append("}")
        return "\n".join(lines)


def is_proper(g: Graph, colouring: EdgeColouring) -> bool:
    """True iff every colour class is a matching (adjacent edges differ)."""
    if colouring.graph != g:
        raise MissingEdgeColourError("colouring belongs to a different graph")
    for v in range(g.n):
        seen: set[int] = set()
        for w in g.neighbours(v):
            c = colouring.colour_of(v, w)
            if c in seen:
                return False
            seen.add(c)
    return True
