from typing import Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, computed_field, field_validator, model_validator

from app.core.errors import ForestParseError, InvalidLabeling, InvalidParameters

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class Tree(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    edges: Tuple[Edge, ...]

    @field_validator("edges")
    @classmethod
    def normalize_edges(cls, edges):
        return tuple(normalize_edge(u, v) for u, v in edges)

    @model_validator(mode="after")
    def check_tree(self):
        vertex_set = set(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise ForestParseError("repeated vertex inside a component")
        if len(self.edges) != len(self.vertices) - 1:
            raise ForestParseError(
                f"component with {len(self.vertices)} vertices and {len(self.edges)} edges is not a tree"
            )
        for u, v in self.edges:
            if u == v or u not in vertex_set or v not in vertex_set:
                raise ForestParseError(f"edge ({u}, {v}) does not join two vertices of its component")
        if not nx.is_tree(self.as_graph()):
            raise ForestParseError("component is disconnected")
        return self

    def as_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def degrees(self) -> Dict[int, int]:
        return dict(self.as_graph().degree)

    @property
    def is_p3(self) -> bool:
        return len(self.vertices) == 3


class Forest(BaseModel):
    model_config = ConfigDict(frozen=True)

    components: Tuple[Tree, ...]

    @model_validator(mode="after")
    def check_disjoint(self):
        seen = set()
        for tree in self.components:
            for v in tree.vertices:
                if v in seen:
                    raise ForestParseError(f"vertex {v} appears in two components")
                seen.add(v)
        return self

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(v for tree in self.components for v in tree.vertices)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(e for tree in self.components for e in tree.edges)

    def degrees(self) -> Dict[int, int]:
        degree: Dict[int, int] = {}
        for tree in self.components:
            degree.update(tree.degrees())
        return degree

    @computed_field
    @property
    def n(self) -> int:
        return sum(len(tree.vertices) for tree in self.components)

    @computed_field
    @property
    def m(self) -> int:
        return sum(len(tree.edges) for tree in self.components)

    @computed_field
    @property
    def ell(self) -> int:
        degree = self.degrees()
        return sum(1 for u, v in self.edges if degree[u] >= 2 and degree[v] >= 2)

    @computed_field
    @property
    def t(self) -> int:
        return sum(1 for tree in self.components if tree.is_p3)

    def degenerate_components(self) -> List[int]:
        return [i for i, tree in enumerate(self.components) if len(tree.vertices) < 3]


class DoubleStarInstance(BaseModel):
    """S_{a,b} + cP_3 with the canonical vertex layout.

    P_3 number i (1-based) has center 3(i-1) and leaves 3(i-1)+1, 3(i-1)+2.
    u_{c+1} = 3c carries the a pendant edges, u_{c+2} = 3c+1 the b pendant edges.
    """

    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    c: int

    @model_validator(mode="after")
    def check_parameters(self):
        if self.a < 1 or self.a > self.b:
            raise InvalidParameters(f"double star needs 1 <= a <= b, got a={self.a}, b={self.b}")
        if self.c < 0:
            raise InvalidParameters(f"number of P3 copies must be non-negative, got c={self.c}")
        return self

    @computed_field
    @property
    def m(self) -> int:
        return self.a + self.b + 1

    @computed_field
    @property
    def k(self) -> int:
        return self.m + 2 * self.c

    @property
    def vertex_count(self) -> int:
        return 3 * self.c + self.a + self.b + 2

    def center(self, i: int) -> int:
        if not 1 <= i <= self.c + 2:
            raise InvalidParameters(f"u_{i} does not exist for c={self.c}")
        return 3 * (i - 1) if i <= self.c else 3 * self.c + (i - self.c - 1)

    def p3_edges(self, i: int) -> Tuple[Edge, Edge]:
        hub = self.center(i)
        return ((hub, hub + 1), (hub, hub + 2))

    @property
    def internal_edge(self) -> Edge:
        return (3 * self.c, 3 * self.c + 1)

    @property
    def side_a_edges(self) -> Tuple[Edge, ...]:
        hub, first = 3 * self.c, 3 * self.c + 2
        return tuple((hub, first + j) for j in range(self.a))

    @property
    def side_b_edges(self) -> Tuple[Edge, ...]:
        hub, first = 3 * self.c + 1, 3 * self.c + 2 + self.a
        return tuple((hub, first + j) for j in range(self.b))

    def canonical_edges(self) -> Tuple[Edge, ...]:
        edges: List[Edge] = []
        for i in range(1, self.c + 1):
            edges.extend(self.p3_edges(i))
        edges.append(self.internal_edge)
        edges.extend(self.side_a_edges)
        edges.extend(self.side_b_edges)
        return tuple(edges)

    @property
    def forest(self) -> Forest:
        components = [
            Tree.model_construct(vertices=(3 * (i - 1), 3 * (i - 1) + 1, 3 * (i - 1) + 2), edges=self.p3_edges(i))
            for i in range(1, self.c + 1)
        ]
        base = 3 * self.c
        components.append(
            Tree.model_construct(
                vertices=tuple(range(base, base + self.a + self.b + 2)),
                edges=(self.internal_edge,) + self.side_a_edges + self.side_b_edges,
            )
        )
        return Forest.model_construct(components=tuple(components))


class Labeling(BaseModel):
    model_config = ConfigDict(frozen=True)

    edges: Tuple[Edge, ...]
    labels: Tuple[int, ...]

    @field_validator("edges")
    @classmethod
    def normalize_edges(cls, edges):
        return tuple(normalize_edge(u, v) for u, v in edges)

    @model_validator(mode="after")
    def check_bijection(self):
        if len(self.edges) != len(self.labels):
            raise InvalidLabeling(f"{len(self.edges)} edges but {len(self.labels)} labels")
        if len(set(self.edges)) != len(self.edges):
            raise InvalidLabeling("an edge is labeled twice")
        if sorted(self.labels) != list(range(1, len(self.labels) + 1)):
            raise InvalidLabeling(f"labels are not a permutation of [1, {len(self.labels)}]")
        return self

    def as_dict(self) -> Dict[Edge, int]:
        return dict(zip(self.edges, self.labels))


class LabelPartition(BaseModel):
    """Label sets f(E_1), ..., f(E_c), f(E_I), f(E_A), f(E_B), each kept sorted."""

    model_config = ConfigDict(frozen=True)

    p3_groups: Tuple[Tuple[int, ...], ...]
    internal: Tuple[int, ...]
    side_a: Tuple[int, ...]
    side_b: Tuple[int, ...]

    @field_validator("internal", "side_a", "side_b")
    @classmethod
    def sort_group(cls, labels):
        return tuple(sorted(labels))

    @field_validator("p3_groups")
    @classmethod
    def sort_p3_groups(cls, groups):
        return tuple(tuple(sorted(g)) for g in groups)

    def groups(self) -> List[Tuple[int, ...]]:
        return list(self.p3_groups) + [self.internal, self.side_a, self.side_b]


class LabelingFile(BaseModel):
    """JSON exchange format: {"edges": [[u, v], ...], "labels": [...]} plus optional context."""

    model_config = ConfigDict(extra="ignore")

    edges: List[Tuple[int, int]]
    labels: List[int]
    graph: Optional[str] = None
    metadata: Optional[dict] = None
