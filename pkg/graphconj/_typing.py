from typing import TYPE_CHECKING, Iterable, Tuple, Union

if TYPE_CHECKING:
    from .graph import Graph

#: One row per vertex; bit u of row v is set iff uv is an edge.
AdjacencyRows = Tuple[int, ...]

#: A vertex set encoded as a bitset.
VertexSet = int

#: Graphs, optionally paired with an identifier.
GraphSource = Iterable[Union["Graph", Tuple[str, "Graph"]]]
