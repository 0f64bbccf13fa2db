"""Exhaustive backtracking over edge labelings of small forests.

Edges are grouped into classes that are labeled in one step: internal edges
one at a time, then every P_3 as an unordered pair (pairs ordered by their
smaller label), then the pendant edges of each remaining center as a set.
A leaf's sum is its edge label, so once the internal edges are fixed the
leaf sums are known and only the non-leaf sums need checking.

Each label choice for the first class is a separate work unit. Units can run
in a process pool; their results are merged in branch order, so the witness
and the node count do not depend on the number of workers.
"""

import logging
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, islice
from math import comb
from typing import Dict, Iterator, List, NamedTuple, Optional, Set, Tuple, Union

from app.core import config
from app.core.errors import InternalConsistencyError, OutOfDomain, RefuseToRun, SearchExhausted
from app.core.forest import with_p3_copies
from app.core.verifier import ad_feasible, is_antimagic
from app.schemas.forest import Edge, Forest, Labeling
from app.schemas.search import SearchOutcome, SearchVerdict

logger = logging.getLogger(__name__)

NEG_INF = float("-inf")

_INTERNAL, _P3, _PENDANT = "internal", "p3", "pendant"

# set in pool workers by _install_stop
_stop_event = None


class _OutOfBudget(Exception):
    pass


class _Aborted(Exception):
    pass


class _Search:
    def __init__(
        self,
        forest: Forest,
        target: Optional[Set[int]] = None,
        budget_nodes: Optional[int] = None,
        wall_budget: Optional[float] = None,
        stop=None,
    ):
        self.forest = forest
        self.stop = stop
        self.m = forest.m
        self.target = target
        self.target_max = max(target) if target else None
        self.budget_nodes = budget_nodes
        self.deadline = time.monotonic() + wall_budget if wall_budget is not None else None
        self.nodes = 0

        degree = forest.degrees()
        self.hubs = {v for v, d in degree.items() if d >= 2}
        self.classes: List[Tuple[str, Tuple[Edge, ...]]] = []
        p3_edges = set()
        for tree in forest.components:
            if tree.is_p3:
                p3_edges.update(tree.edges)
        for u, v in forest.edges:
            if u in self.hubs and v in self.hubs:
                self.classes.append((_INTERNAL, ((u, v),)))
        self.n_internal = len(self.classes)
        for tree in forest.components:
            if tree.is_p3:
                self.classes.append((_P3, tree.edges))
        pendant: Dict[int, List[Edge]] = {}
        for u, v in forest.edges:
            if (u, v) in p3_edges or (u in self.hubs and v in self.hubs):
                continue
            pendant.setdefault(u if u in self.hubs else v, []).append((u, v))
        for hub in sorted(pendant):
            self.classes.append((_PENDANT, tuple(pendant[hub])))

        last: Dict[int, int] = {}
        for idx, (_, edges) in enumerate(self.classes):
            for u, v in edges:
                for w in (u, v):
                    if w in self.hubs:
                        last[w] = idx
        self.completes: List[List[int]] = [[] for _ in self.classes]
        for w, idx in last.items():
            self.completes[idx].append(w)

        self.used: Set[int] = set()
        self.assign: Dict[Edge, int] = {}
        self.vsum: Dict[int, int] = {w: 0 for w in self.hubs}
        self.taken: Set[int] = set()
        self.pendant_labels: Set[int] = set()
        self.solution: Optional[Dict[Edge, int]] = None

    def _tick(self):
        self.nodes += 1
        if self.budget_nodes is not None and self.nodes > self.budget_nodes:
            raise _OutOfBudget()
        if self.nodes % 256 == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise _OutOfBudget()
            if self.stop is not None and self.stop.is_set():
                raise _Aborted()

    def _sum_allowed(self, s: int, pendant_known: bool) -> bool:
        if s in self.taken:
            return False
        if pendant_known and s in self.pendant_labels:
            return False
        return self.target is None or s in self.target

    def _enter_pendant_phase(self) -> bool:
        self.pendant_labels = {label for label in range(1, self.m + 1) if label not in self.used}
        if self.target is not None and not self.pendant_labels <= self.target:
            return False
        return not (self.taken & self.pendant_labels)

    def _place(self, idx: int, edges: Tuple[Edge, ...], combo: Tuple[int, ...]) -> Optional[List[int]]:
        for (u, v), label in zip(edges, combo):
            self.used.add(label)
            self.assign[(u, v)] = label
            for w in (u, v):
                if w in self.hubs:
                    self.vsum[w] += label
        if self.target_max is not None:
            for u, v in edges:
                for w in (u, v):
                    if w in self.hubs and self.vsum[w] > self.target_max:
                        return None
        added = []
        for w in self.completes[idx]:
            s = self.vsum[w]
            if not self._sum_allowed(s, idx >= self.n_internal):
                self.taken.difference_update(added)
                return None
            self.taken.add(s)
            added.append(s)
        return added

    def _unplace(self, edges: Tuple[Edge, ...], combo: Tuple[int, ...], added: Optional[List[int]]):
        if added:
            self.taken.difference_update(added)
        for (u, v), label in zip(edges, combo):
            self.used.discard(label)
            del self.assign[(u, v)]
            for w in (u, v):
                if w in self.hubs:
                    self.vsum[w] -= label

    def descend(self, idx: int = 0, p3_floor: int = 0) -> bool:
        if idx == self.n_internal and not self._enter_pendant_phase():
            return False
        if idx == len(self.classes):
            self.solution = dict(self.assign)
            return True
        kind, edges = self.classes[idx]
        free = [label for label in range(1, self.m + 1) if label not in self.used]
        for combo in combinations(free, len(edges)):
            if kind == _P3 and combo[0] <= p3_floor:
                continue
            self._tick()
            added = self._place(idx, edges, combo)
            if added is not None:
                floor = combo[0] if kind == _P3 else p3_floor
                if self.descend(idx + 1, floor):
                    return True
            self._unplace(edges, combo, added)
        return False

    def roots(self) -> Iterator[Tuple[int, ...]]:
        return combinations(range(1, self.m + 1), len(self.classes[0][1]))

    def descend_root(self, combo: Tuple[int, ...]) -> bool:
        if self.n_internal == 0 and not self._enter_pendant_phase():
            return False
        kind, edges = self.classes[0]
        self._tick()
        added = self._place(0, edges, combo)
        if added is None:
            return False
        return self.descend(1, combo[0] if kind == _P3 else 0)


def _check_domain(g: Forest):
    degenerate = g.degenerate_components()
    if degenerate:
        raise OutOfDomain(f"components {degenerate} are isolated vertices or single edges")


def _check_cap(m: int, budget_nodes: Optional[int], wall_budget: Optional[float], edge_cap: Optional[int]):
    cap = edge_cap if edge_cap is not None else config.settings.EDGE_CAP
    if m > cap and budget_nodes is None and wall_budget is None:
        raise RefuseToRun(f"{m} edges exceed the search cap of {cap}; pass a budget to search anyway")


class _UnitResult(NamedTuple):
    solution: Optional[Dict[Edge, int]]
    nodes: int
    exhausted: bool = False
    aborted: bool = False


def _install_stop(event):
    global _stop_event
    _stop_event = event


def _run_unit(
    g: Forest,
    target: Optional[Set[int]],
    index: int,
    budget_nodes: Optional[int],
    deadline: Optional[float],
) -> _UnitResult:
    wall_budget = None if deadline is None else max(deadline - time.monotonic(), 0.0)
    search = _Search(g, target, budget_nodes, wall_budget, _stop_event)
    combo = next(islice(search.roots(), index, None))
    try:
        found = search.descend_root(combo)
    except _OutOfBudget:
        return _UnitResult(None, search.nodes, exhausted=True)
    except _Aborted:
        return _UnitResult(None, search.nodes, aborted=True)
    return _UnitResult(search.solution if found else None, search.nodes)


def _merge(
    results: Iterator[_UnitResult], budget_nodes: Optional[int]
) -> Tuple[SearchVerdict, Optional[Dict[Edge, int]], int]:
    """Fold unit results in branch order; the first decisive unit wins."""
    total = 0
    for result in results:
        total += result.nodes
        if result.exhausted or (budget_nodes is not None and total > budget_nodes):
            if budget_nodes is not None:
                total = min(total, budget_nodes + 1)
            return SearchVerdict.EXHAUSTED, None, total
        if result.solution is not None:
            return SearchVerdict.FOUND, result.solution, total
    return SearchVerdict.REFUTED, None, total


def _collect(
    g: Forest,
    target: Optional[Set[int]],
    units: int,
    budget_nodes: Optional[int],
    deadline: Optional[float],
    workers: int,
) -> Tuple[SearchVerdict, Optional[Dict[Edge, int]], int]:
    if workers <= 1 or units == 1:
        return _merge((_run_unit(g, target, i, budget_nodes, deadline) for i in range(units)), budget_nodes)
    context = multiprocessing.get_context("spawn")
    stop = context.Event()
    with ProcessPoolExecutor(
        max_workers=workers, mp_context=context, initializer=_install_stop, initargs=(stop,)
    ) as pool:
        futures = [pool.submit(_run_unit, g, target, i, budget_nodes, deadline) for i in range(units)]
        try:
            return _merge((future.result() for future in futures), budget_nodes)
        finally:
            stop.set()
            for future in futures:
                future.cancel()


def _run(
    g: Forest,
    target: Optional[Set[int]],
    budget_nodes: Optional[int],
    wall_budget: Optional[float],
    workers: Optional[int] = None,
) -> SearchOutcome:
    search = _Search(g, target)
    units = comb(search.m, len(search.classes[0][1]))
    workers = workers if workers is not None else config.settings.SEARCH_WORKERS
    deadline = time.monotonic() + wall_budget if wall_budget is not None else None
    logger.info("searching %s edges in %s classes, %s units on %s workers", g.m, len(search.classes), units, workers)
    verdict, solution, nodes = _collect(g, target, units, budget_nodes, deadline, workers)
    logger.info("search finished after %s nodes: %s", nodes, verdict.value)
    if verdict is not SearchVerdict.FOUND:
        return SearchOutcome(
            verdict=verdict,
            nodes_explored=nodes,
            budget_nodes=budget_nodes,
            wall_budget=wall_budget,
        )
    labeling = Labeling(edges=g.edges, labels=tuple(solution[e] for e in g.edges))
    report = is_antimagic(g, labeling)
    if not report.antimagic:
        raise InternalConsistencyError("search produced a labeling with repeated vertex sums")
    if target is not None and set(report.sums) != target:
        raise InternalConsistencyError("search produced sums outside the requested progression")
    return SearchOutcome(
        verdict=SearchVerdict.FOUND,
        labeling=labeling,
        nodes_explored=nodes,
        budget_nodes=budget_nodes,
        wall_budget=wall_budget,
    )


def exhaustive_antimagic(
    g: Forest,
    budget_nodes: Optional[int] = None,
    wall_budget: Optional[float] = None,
    edge_cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> SearchOutcome:
    _check_domain(g)
    _check_cap(g.m, budget_nodes, wall_budget, edge_cap)
    return _run(g, None, budget_nodes, wall_budget, workers)


def search_ad(
    g: Forest,
    a: int,
    d: int,
    budget_nodes: Optional[int] = None,
    wall_budget: Optional[float] = None,
    edge_cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> Optional[SearchOutcome]:
    """Look for an (a,d)-antimagic labeling; None when the counting condition already rules it out."""
    _check_domain(g)
    if not ad_feasible(g.n, g.m, a, d):
        logger.info("(%s,%s) ruled out for n=%s m=%s by counting", a, d, g.n, g.m)
        return None
    _check_cap(g.m, budget_nodes, wall_budget, edge_cap)
    return _run(g, {a + i * d for i in range(g.n)}, budget_nodes, wall_budget, workers)


def search_11(
    g: Forest,
    budget_nodes: Optional[int] = None,
    wall_budget: Optional[float] = None,
    edge_cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> Optional[SearchOutcome]:
    return search_ad(g, 1, 1, budget_nodes, wall_budget, edge_cap, workers)


def exhaustive_tau(
    base: Forest,
    c_limit: int,
    budget_nodes: Optional[int] = None,
    edge_cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> Union[int, float]:
    """Largest c <= c_limit with base + c'P_3 antimagic for all c' <= c, or NEG_INF if base is not."""
    _check_domain(base)
    _check_cap(base.m + 2 * c_limit, budget_nodes, None, edge_cap)
    for c in range(c_limit + 1):
        outcome = _run(with_p3_copies(base, c), None, budget_nodes, None, workers)
        if outcome.verdict is SearchVerdict.EXHAUSTED:
            raise SearchExhausted(f"budget ran out at c={c} after {outcome.nodes_explored} nodes")
        if outcome.verdict is SearchVerdict.REFUTED:
            return c - 1 if c > 0 else NEG_INF
    return c_limit
