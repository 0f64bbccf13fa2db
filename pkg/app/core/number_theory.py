import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement, product
from typing import List, Optional, Tuple

import networkx as nx
from sympy.solvers.diophantine.diophantine import diop_DN
from sympy.utilities.iterables import partitions

from app.core import config
from app.core.bounds import tau_double_star
from app.core.errors import InvalidParameters, OutOfScope
from app.core.forest import forest_code
from app.schemas.forest import Forest, Tree
from app.schemas.number_theory import PellScreen, PellSolution

logger = logging.getLogger(__name__)


def pell_solutions(max_n: int) -> List[PellSolution]:
    if max_n < 3:
        raise InvalidParameters(f"max_n must be at least 3, got {max_n}")
    (x, y), = diop_DN(2, -1)
    (u, v), = diop_DN(2, 1)
    x, y, u, v = int(x), int(y), int(u), int(v)
    solutions = []
    while (x - 1) // 2 <= max_n:
        n, m = (x - 1) // 2, (y - 1) // 2
        if n >= 1:
            solutions.append(PellSolution(n=n, m=m))
        x, y = x * u + 2 * y * v, x * v + y * u
    return solutions


def _tree_from_graph(graph: nx.Graph, offset: int) -> Tree:
    relabel = {node: offset + i for i, node in enumerate(sorted(graph.nodes))}
    return Tree(
        vertices=tuple(sorted(relabel.values())),
        edges=tuple((relabel[u], relabel[v]) for u, v in graph.edges),
    )


def _shapes_for_partition(parts: Tuple[Tuple[int, int], ...]) -> List[Forest]:
    choices = []
    for size, count in parts:
        trees = list(nx.nonisomorphic_trees(size))
        choices.append([[trees[i] for i in combo] for combo in combinations_with_replacement(range(len(trees)), count)])
    forests = []
    for pick in product(*choices):
        components, offset = [], 0
        for graph in (g for group in pick for g in group):
            components.append(_tree_from_graph(graph, offset))
            offset += graph.number_of_nodes()
        forests.append(Forest(components=tuple(components)))
    return forests


def census_shapes(n: int, m: int, workers: Optional[int] = None) -> List[Forest]:
    if m >= n:
        raise OutOfScope(f"m={m} >= n={n} leaves the forest regime")
    if m < 2:
        raise InvalidParameters(f"need at least one P3, got m={m}")
    c = n - m
    blocks = []
    for parts in partitions(n, m=c):
        if sum(parts.values()) != c or min(parts) < 3:
            continue
        blocks.append(tuple(sorted(parts.items(), reverse=True)))
    workers = workers if workers is not None else config.settings.SEARCH_WORKERS
    if workers <= 1 or len(blocks) <= 1:
        per_block = [_shapes_for_partition(block) for block in blocks]
    else:
        with ProcessPoolExecutor(max_workers=workers, mp_context=multiprocessing.get_context("spawn")) as pool:
            per_block = list(pool.map(_shapes_for_partition, blocks))
    shapes: List[Forest] = []
    seen = set()
    for forest in (forest for block in per_block for forest in block):
        code = forest_code(forest)
        if code not in seen:
            seen.add(code)
            shapes.append(forest)
    logger.info("census n=%s m=%s: %s forests from %s partitions", n, m, len(shapes), len(blocks))
    return shapes


def screen_density(n: int, m: int) -> bool:
    if n < 3:
        raise InvalidParameters(f"density screen needs n >= 3, got n={n}")
    return 4 * m >= 3 * n


def screen_double_star_pell(solution: PellSolution) -> PellScreen:
    n, m = solution.n, solution.m
    c = n - m - 1
    m_ds = m - 2 * c
    if c < 0 or m_ds < 3:
        return PellScreen(
            n=n,
            m=m,
            double_star_candidate=False,
            reason=f"no double star with c >= 0 copies of P3 has {n} vertices and {m} edges",
        )
    cap = 2 * m_ds + 6
    witnesses = [
        a for a in range(1, (m_ds - 1) // 2 + 1) if tau_double_star(a, m_ds - 1 - a).value >= c
    ]
    relation = "<=" if c <= cap else ">"
    return PellScreen(
        n=n,
        m=m,
        double_star_candidate=True,
        m_ds=m_ds,
        c=c,
        cap=cap,
        feasible=c <= cap,
        witnesses=witnesses,
        reason=f"{c} {relation} {cap} = 2*{m_ds}+6",
    )
