import re
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from app.core.errors import ForestParseError, InvalidLabeling, MalformedPartition
from app.schemas.forest import (
    DoubleStarInstance,
    Edge,
    Forest,
    LabelPartition,
    Labeling,
    Tree,
    normalize_edge,
)

_TERM = re.compile(r"^(?:(?P<count>\d+)\*)?(?:P(?P<path>\d+)|S\((?P<a>\d+),(?P<b>\d+)\)|S(?P<star>\d+)|C(?P<cycle>\d+))$")


def build_instance(a: int, b: int, c: int) -> DoubleStarInstance:
    return DoubleStarInstance(a=a, b=b, c=c)


def partition_to_labeling(instance: DoubleStarInstance, part: LabelPartition) -> Labeling:
    if len(part.p3_groups) != instance.c:
        raise MalformedPartition(f"expected {instance.c} P3 groups, got {len(part.p3_groups)}")
    for i, group in enumerate(part.p3_groups, start=1):
        if len(group) != 2:
            raise MalformedPartition(f"E_{i} needs 2 labels, got {len(group)}")
    expected = (("E_I", part.internal, 1), ("E_A", part.side_a, instance.a), ("E_B", part.side_b, instance.b))
    for name, group, size in expected:
        if len(group) != size:
            raise MalformedPartition(f"{name} needs {size} labels, got {len(group)}")
    every = sorted(label for group in part.groups() for label in group)
    if every != list(range(1, instance.k + 1)):
        raise MalformedPartition(f"groups are not a disjoint cover of [1, {instance.k}]")

    edges: List[Edge] = []
    labels: List[int] = []
    for i, group in enumerate(part.p3_groups, start=1):
        edges.extend(instance.p3_edges(i))
        labels.extend(group)
    edges.append(instance.internal_edge)
    labels.extend(part.internal)
    edges.extend(instance.side_a_edges)
    labels.extend(part.side_a)
    edges.extend(instance.side_b_edges)
    labels.extend(part.side_b)
    return Labeling.model_construct(edges=tuple(edges), labels=tuple(labels))


def vertex_sums(forest: Forest, f: Labeling) -> Dict[int, int]:
    if len(f.edges) != forest.m or set(f.edges) != set(forest.edges):
        raise InvalidLabeling("labeling does not cover exactly the edges of the forest")
    if sorted(f.labels) != list(range(1, forest.m + 1)):
        raise InvalidLabeling(f"labels are not a permutation of [1, {forest.m}]")
    sums = {v: 0 for v in forest.vertices}
    for (u, v), label in zip(f.edges, f.labels):
        sums[u] += label
        sums[v] += label
    return sums


def _path(start: int, order: int) -> Tree:
    vertices = tuple(range(start, start + order))
    return Tree(vertices=vertices, edges=tuple((v, v + 1) for v in vertices[:-1]))


def _star(start: int, leaves: int) -> Tree:
    return Tree(
        vertices=tuple(range(start, start + leaves + 1)),
        edges=tuple((start, start + j) for j in range(1, leaves + 1)),
    )


def _double_star(start: int, a: int, b: int) -> Tree:
    left, right = start, start + 1
    edges = [(left, right)]
    edges += [(left, start + 2 + j) for j in range(a)]
    edges += [(right, start + 2 + a + j) for j in range(b)]
    return Tree(vertices=tuple(range(start, start + a + b + 2)), edges=tuple(edges))


def parse_forest(text: str) -> Forest:
    """Parse ``term ("+" term)*`` with terms P<n>, S<n>, S(<a>,<b>) and an optional ``<k>*`` prefix."""
    text = re.sub(r"\s+", "", text or "")
    if not text:
        raise ForestParseError("empty forest description")
    components: List[Tree] = []
    next_id = 0
    for position, term in enumerate(text.split("+")):
        match = _TERM.match(term)
        if match is None:
            raise ForestParseError(f"cannot parse term {term!r}", position)
        if match["cycle"] is not None:
            raise ForestParseError(f"{term} is a cycle, not a tree", position)
        count = int(match["count"]) if match["count"] else 1
        if count < 1:
            raise ForestParseError(f"repetition count must be positive in {term!r}", position)
        for _ in range(count):
            if match["path"] is not None:
                order = int(match["path"])
                if order < 1:
                    raise ForestParseError(f"path needs at least one vertex in {term!r}", position)
                tree = _path(next_id, order)
            elif match["star"] is not None:
                leaves = int(match["star"])
                if leaves < 1:
                    raise ForestParseError(f"star needs at least one pendant edge in {term!r}", position)
                tree = _star(next_id, leaves)
            else:
                a, b = int(match["a"]), int(match["b"])
                if a < 1 or b < 1:
                    raise ForestParseError(f"double star needs a, b >= 1 in {term!r}", position)
                tree = _double_star(next_id, a, b)
            components.append(tree)
            next_id += len(tree.vertices)
    return Forest(components=tuple(components))


def forest_from_edges(edges: Iterable[Sequence[int]]) -> Forest:
    normalized = [normalize_edge(int(u), int(v)) for u, v in edges]
    if len(set(normalized)) != len(normalized):
        raise ForestParseError("edge list repeats an edge")
    graph = nx.Graph()
    graph.add_edges_from(normalized)
    if graph.number_of_nodes() == 0:
        raise ForestParseError("edge list is empty")
    if not nx.is_forest(graph):
        raise ForestParseError("edge list contains a cycle")
    components = []
    for nodes in sorted(nx.connected_components(graph), key=min):
        components.append(
            Tree(vertices=tuple(sorted(nodes)), edges=tuple(e for e in normalized if e[0] in nodes))
        )
    return Forest(components=tuple(components))


def with_p3_copies(forest: Forest, c: int) -> Forest:
    start = max(forest.vertices, default=-1) + 1
    extra = tuple(_path(start + 3 * j, 3) for j in range(c))
    return Forest(components=forest.components + extra)


def _rooted_code(graph: nx.Graph, root, parent=None) -> str:
    children = sorted(_rooted_code(graph, w, root) for w in graph.neighbors(root) if w != parent)
    return "(" + "".join(children) + ")"


def tree_code(tree: Tree) -> str:
    graph = tree.as_graph()
    if graph.number_of_nodes() == 1:
        return "()"
    return min(_rooted_code(graph, center) for center in nx.center(graph))


def forest_code(forest: Forest) -> Tuple[str, ...]:
    return tuple(sorted(tree_code(tree) for tree in forest.components))


def tree_name(tree: Tree) -> str:
    order = len(tree.vertices)
    degree = tree.degrees()
    if max(degree.values(), default=0) <= 2:
        return f"P{order}"
    hubs = [v for v, d in degree.items() if d >= 2]
    if len(hubs) == 1:
        return f"S{order - 1}"
    if len(hubs) == 2 and normalize_edge(*hubs) in set(tree.edges):
        a, b = sorted(degree[h] - 1 for h in hubs)
        return f"S({a},{b})"
    return f"T{order}[{tree_code(tree)}]"


def describe(forest: Forest) -> str:
    names = sorted(((len(tree.vertices), tree_name(tree)) for tree in forest.components), key=lambda x: (-x[0], x[1]))
    counts = Counter(name for _, name in names)
    terms = []
    for _, name in names:
        if name in counts:
            k = counts.pop(name)
            terms.append(name if k == 1 else f"{k}*{name}")
    return "+".join(terms)


def to_dot(forest: Forest, f: Optional[Labeling] = None, name: str = "forest") -> str:
    sums = vertex_sums(forest, f) if f is not None else {}
    labels = f.as_dict() if f is not None else {}
    lines = [f"graph {name} {{"]
    for v in forest.vertices:
        if v in sums:
            lines.append(f'  {v} [label="{sums[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in forest.edges:
        if (u, v) in labels:
            lines.append(f'  {u} -- {v} [label="{labels[(u, v)]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
