"""The Auslander-Reiten quiver read off a terminal bocs.

Vertices of a terminal bocs are the indecomposables; dashed arrows with zero
differential are the irreducible maps between them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from bocs_engine.dbq import DifferentialBiquiver
from bocs_engine.logger import logger
from bocs_engine.reduce.engine import Terminal, Verdict, VertexProvenance


@dataclass(frozen=True)
class ARNode:
    """An indecomposable: a terminal vertex with its Delta-support."""

    vertex: str
    support: tuple[int, ...]
    label: str


@dataclass(frozen=True)
class AREdge:
    """An irreducible map: a dashed arrow with zero differential."""

    name: str
    source: str
    target: str


@dataclass
class ARQuiver:
    """Nodes and irreducible maps of a terminal bocs.

    Attributes:
        name: Name of the bocs the quiver was read from.
        originals: The original vertices, in order; supports are vectors over them.
        nodes: One node per terminal vertex, in vertex order.
        edges: The zero-differential dashed arrows, in arrow order.
    """

    name: str
    originals: list[str]
    nodes: list[ARNode] = field(default_factory=list)
    edges: list[AREdge] = field(default_factory=list)

    def node(self, vertex: str) -> ARNode:
        for node in self.nodes:
            if node.vertex == vertex:
                return node
        raise ValueError(f"No node '{vertex}' in the AR quiver of {self.name}")

    def dimension_vectors(self, delta_dims: dict[str, tuple[int, ...]]) -> dict[str, tuple[int, ...]]:
        """Dimension vectors from the dimension vectors of the Delta(j).

        Args:
            delta_dims: For each original vertex j, the dimension vector of Delta(j).
        """
        missing = [v for v in self.originals if v not in delta_dims]
        if missing:
            raise ValueError(f"No dimension vector given for Delta of {missing}")
        size = len(next(iter(delta_dims.values()), ()))
        vectors = {}
        for node in self.nodes:
            total = [0] * size
            for v, m in zip(self.originals, node.support):
                for k, d in enumerate(delta_dims[v]):
                    total[k] += m * d
            vectors[node.vertex] = tuple(total)
        return vectors

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph(name=self.name)
        for node in self.nodes:
            graph.add_node(node.vertex, support=node.support, label=node.label)
        for edge in self.edges:
            graph.add_edge(edge.source, edge.target, key=edge.name, style="dashed")
        return graph

    def to_dot(self) -> str:
        lines = [f'digraph "{self.name}" {{', "  rankdir=LR;"]
        for node in self.nodes:
            lines.append(f'  "{node.vertex}" [label="{node.vertex}\\n{node.label}"];')
        for edge in self.edges:
            lines.append(
                f'  "{edge.source}" -> "{edge.target}" [label="{edge.name}", style=dashed];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def ar_quiver(terminal: Verdict | DifferentialBiquiver, provenance: VertexProvenance) -> ARQuiver:
    """Read the AR quiver off a terminal bocs.

    Raises:
        ValueError: if the verdict is not Terminal or the bocs has solid arrows.
    """
    if isinstance(terminal, Verdict):
        # Check that a valid verdict has been passed
        if not isinstance(terminal, Terminal):
            raise ValueError(f"An AR quiver needs a terminal bocs, got '{terminal.kind}'")
        dbq = terminal.dbq
    else:
        dbq = terminal
    if dbq.biquiver.solid_arrows and not len(dbq.ideal):
        raise ValueError(f"{dbq.name} still has solid arrows")

    arq = ARQuiver(dbq.name, list(provenance.originals))
    for v in dbq.vertices:
        arq.nodes.append(ARNode(v, provenance.multiplicities(v), provenance.label(v)))
    for arrow in dbq.biquiver.dashed_arrows:
        if dbq.d(arrow.name).is_zero():
            arq.edges.append(AREdge(arrow.name, arrow.source, arrow.target))

    logger.info(f"AR quiver of {dbq.name}: {len(arq.nodes)} nodes, {len(arq.edges)} edges")
    return arq
