"""Command line front end: ``python -m app.cli <command> ...``.

Exit codes: 0 ok, 1 usage or invalid parameters, 2 verification failed,
3 (a,d) mismatch, 4 refused, out of range or invalid input.
"""

import json
import sys
from typing import List, Optional, Sequence

import click

from app.core.bounds import lemma_upper_bounds, table1_rows, tau_double_star
from app.core.config import configure_logging, get_settings
from app.core.constructor import construct_labeling
from app.core.errors import AntimagicError, InvalidParameters
from app.core.fixtures import verify_figure2
from app.core.forest import build_instance, describe, parse_forest, to_dot
from app.core.number_theory import census_shapes, pell_solutions, screen_density, screen_double_star_pell
from app.core.oracle import NEG_INF, exhaustive_antimagic, exhaustive_tau, search_11
from app.core.verifier import verify_labeling_file
from app.schemas.cli import CommandOutcome
from app.schemas.forest import Labeling
from app.schemas.search import SearchMode, SearchVerdict

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_MISMATCH, EXIT_REFUSED = 0, 1, 2, 3, 4


def _dump(data) -> str:
    return json.dumps(data, indent=2)


def _parse_ad(value: Optional[str]):
    if value is None:
        return None
    try:
        a, d = (int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected a,d as two integers, got {value!r}", param_hint="--expect-ad")
    return a, d


@click.group()
@click.option("--log-level", default=None, help="Logging level (defaults to ANTIMAGIC_LOG_LEVEL).")
def cli(log_level):
    """Antimagic labelings of double stars joined with copies of P3."""
    configure_logging(log_level)


@cli.command()
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
def tau(a, b, as_json):
    """Tolerance of S_{a,b} with the case attaining it and the upper bounds."""
    result = tau_double_star(a, b)
    bounds = lemma_upper_bounds(a, b)
    if as_json:
        payload = _dump({"a": a, "b": b, **result.model_dump(mode="json"), "bounds": bounds.model_dump()})
    else:
        lines = [
            f"tau(S_{{{a},{b}}}) = {result.value}  case {result.attained_case.value}",
            f"tau_0 = {result.tau0}  cap = {result.tau_cap}  beta = {bounds.beta}",
        ]
        if bounds.lemma_upb2 is not None:
            lines.append(f"lemma bound (a=1) = {bounds.lemma_upb2}")
        if bounds.lemma_upb3 is not None:
            lines.append(f"lemma bound (a>=2) = {bounds.lemma_upb3}")
        payload = "\n".join(lines)
    return CommandOutcome(exit_code=EXIT_OK, payload=payload)


@cli.command()
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@click.option("--c", "c", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "dot", "text"]), default="text")
@click.option("--trace", "show_trace", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
def construct(a, b, c, fmt, show_trace, as_json):
    """Antimagic labeling of S_{a,b} + cP3."""
    out = construct_labeling(a, b, c)
    if as_json or fmt == "json":
        data = out.model_dump(mode="json")
        if not show_trace:
            data.pop("trace")
        return CommandOutcome(exit_code=EXIT_OK, payload=_dump(data))
    if fmt == "dot":
        inst = build_instance(a, b, c)
        labeling = Labeling(edges=tuple(tuple(e) for e in out.edges), labels=tuple(out.labels))
        return CommandOutcome(exit_code=EXIT_OK, payload=to_dot(inst.forest, labeling).rstrip("\n"))
    lines = [f"{out.graph}  k={out.k}"]
    for i, group in enumerate(out.partition["p3_groups"], start=1):
        lines.append(f"E_{i}: {' '.join(map(str, group))}")
    lines.append(f"E_I: {' '.join(map(str, out.partition['internal']))}")
    lines.append(f"E_A: {' '.join(map(str, out.partition['side_a']))}")
    lines.append(f"E_B: {' '.join(map(str, out.partition['side_b']))}")
    if show_trace:
        trace = out.trace
        lines.append(
            f"case {trace.case_tag.value}  index={trace.chosen_index}  W={list(trace.W) if trace.W else None}"
            f"  swap={trace.swap_applied}"
        )
    return CommandOutcome(exit_code=EXIT_OK, payload="\n".join(lines))


@cli.command()
@click.argument("labeling", type=click.File("r"))
@click.option("--expect-ad", default=None, help="Expected progression as a,d.")
@click.option("--json", "as_json", is_flag=True)
def verify(labeling, expect_ad, as_json):
    """Check a labeling file; '-' reads standard input."""
    expected = _parse_ad(expect_ad)
    try:
        payload = json.load(labeling)
    except json.JSONDecodeError as e:
        raise click.BadParameter(f"not valid JSON: {e}", param_hint="LABELING")
    forest, report = verify_labeling_file(payload)
    if not report.antimagic:
        code = EXIT_FAILED
    elif expected is not None and report.ad_progression != expected:
        code = EXIT_MISMATCH
    else:
        code = EXIT_OK
    if as_json:
        return CommandOutcome(
            exit_code=code,
            payload=_dump({"graph": describe(forest), **report.model_dump(mode="json")}),
        )
    if report.antimagic:
        progression = f"  (a,d)={report.ad_progression}" if report.ad_progression else ""
        text = f"PASS {describe(forest)} antimagic{progression}"
        if code == EXIT_MISMATCH:
            text = f"MISMATCH {describe(forest)} expected (a,d)={expected}, found {report.ad_progression}"
    else:
        w = report.duplicate_witness
        text = f"FAIL {describe(forest)} vertices {w.u} and {w.v} share the sum {w.shared_sum}"
    return CommandOutcome(exit_code=code, payload=text)


def _outcome_dict(outcome) -> dict:
    data = outcome.model_dump(mode="json")
    if outcome.labeling is not None:
        data["labeling"] = {"edges": [list(e) for e in outcome.labeling.edges], "labels": list(outcome.labeling.labels)}
    return data


@cli.command()
@click.option("--graph", required=True, help='Forest such as "S(1,2)+5*P3".')
@click.option("--mode", type=click.Choice([mode.value for mode in SearchMode]), default=SearchMode.ANTIMAGIC.value)
@click.option("--budget-nodes", type=int, default=None)
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Processes for the root branches.")
@click.option("--json", "as_json", is_flag=True)
def search(graph, mode, budget_nodes, workers, as_json):
    """Exhaustive search for an antimagic or (1,1)-antimagic labeling."""
    forest = parse_forest(graph)
    if mode == SearchMode.ONE_ONE.value:
        outcome = search_11(forest, budget_nodes=budget_nodes, workers=workers)
    else:
        outcome = exhaustive_antimagic(forest, budget_nodes=budget_nodes, workers=workers)
    if outcome is None:
        if as_json:
            return CommandOutcome(exit_code=EXIT_OK, payload=_dump({"graph": graph, "verdict": None, "screened_out": True}))
        return CommandOutcome(exit_code=EXIT_OK, payload=f"{graph}: n={forest.n}, m={forest.m} cannot carry sums 1..n")
    if as_json:
        return CommandOutcome(exit_code=EXIT_OK, payload=_dump({"graph": graph, **_outcome_dict(outcome)}))
    text = f"{graph}: {outcome.verdict.value.upper()} after {outcome.nodes_explored} nodes"
    if outcome.verdict is SearchVerdict.FOUND:
        text += "\n" + " ".join(f"{u}-{v}:{label}" for (u, v), label in zip(outcome.labeling.edges, outcome.labeling.labels))
    return CommandOutcome(exit_code=EXIT_OK, payload=text)


@cli.command("tau-exhaustive")
@click.option("--graph", required=True)
@click.option("--c-limit", type=int, required=True)
@click.option("--budget-nodes", type=int, default=None)
@click.option("--workers", type=click.IntRange(min=1), default=None)
@click.option("--json", "as_json", is_flag=True)
def tau_exhaustive(graph, c_limit, budget_nodes, workers, as_json):
    """Tolerance by exhaustive search, checking base + c'P3 for c' = 0..c_limit."""
    value = exhaustive_tau(parse_forest(graph), c_limit, budget_nodes=budget_nodes, workers=workers)
    negative = value == NEG_INF
    if as_json:
        return CommandOutcome(
            exit_code=EXIT_OK,
            payload=_dump({"graph": graph, "c_limit": c_limit, "tau": None if negative else value, "base_antimagic": not negative}),
        )
    shown = "-inf" if negative else str(value)
    suffix = " (reached c_limit)" if value == c_limit else ""
    return CommandOutcome(exit_code=EXIT_OK, payload=f"tau({graph}) = {shown}{suffix}")


@cli.command()
@click.option("--max-n", type=int, required=True)
@click.option("--screen", is_flag=True, help="Also screen each pair against double stars.")
@click.option("--json", "as_json", is_flag=True)
def pell(max_n, screen, as_json):
    """Vertex/edge counts n, m with (2n+1)^2 - 2(2m+1)^2 = -1."""
    solutions = pell_solutions(max_n)
    rows = []
    for sol in solutions:
        row = {"n": sol.n, "m": sol.m, "density_ok": screen_density(sol.n, sol.m)}
        if screen:
            row["screen"] = screen_double_star_pell(sol).model_dump()
        rows.append(row)
    if as_json:
        return CommandOutcome(exit_code=EXIT_OK, payload=_dump(rows))
    lines = []
    for row in rows:
        line = f"n={row['n']} m={row['m']}"
        if screen:
            s = row["screen"]
            if s["double_star_candidate"]:
                verdict = "feasible" if s["feasible"] else "infeasible"
                line += f"  S_ab+{s['c']}P3 with |E(S_ab)|={s['m_ds']}: {verdict} ({s['reason']}) a in {s['witnesses']}"
            else:
                line += f"  {s['reason']}"
        lines.append(line)
    return CommandOutcome(exit_code=EXIT_OK, payload="\n".join(lines))


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--check-one-one", is_flag=True, help="Search each forest for a (1,1)-antimagic labeling.")
@click.option("--workers", type=click.IntRange(min=1), default=None)
@click.option("--json", "as_json", is_flag=True)
def census(n, m, check_one_one, workers, as_json):
    """Forests on n vertices and m edges without components smaller than P3."""
    rows = []
    for forest in census_shapes(n, m, workers=workers):
        row = {"graph": describe(forest)}
        if check_one_one:
            outcome = search_11(forest, workers=workers)
            row["one_one"] = None if outcome is None else outcome.verdict.value
        rows.append(row)
    if as_json:
        return CommandOutcome(exit_code=EXIT_OK, payload=_dump(rows))
    lines = [row["graph"] + (f"  (1,1): {row['one_one']}" if check_one_one else "") for row in rows]
    return CommandOutcome(exit_code=EXIT_OK, payload="\n".join(lines))


@cli.command()
@click.option("--m-lo", type=int, default=3)
@click.option("--m-hi", type=int, default=29)
@click.option("--json", "as_json", is_flag=True)
def table1(m_lo, m_hi, as_json):
    """Tolerance of every S_{a,b} with a <= (m-1)/2; cell j means 2m+j, '0' means tau_0 < 2m+1, '*' a tie with tau_0."""
    rows = table1_rows(m_lo, m_hi)
    if as_json:
        return CommandOutcome(exit_code=EXIT_OK, payload=_dump([row.model_dump(mode="json") for row in rows]))
    lines = []
    for row in rows:
        cells = [str(cell.offset or 0) + ("*" if cell.starred else "") for cell in row.cells]
        lines.append(f"m={row.m:>3} tau_0={row.tau0:>3} | {' '.join(cells)}")
    return CommandOutcome(exit_code=EXIT_OK, payload="\n".join(lines))


@cli.command()
@click.option("--json", "as_json", is_flag=True)
def figure2(as_json):
    """Verify the six bundled (1,1)-antimagic labelings on 20 vertices and 14 edges."""
    results = verify_figure2()
    code = EXIT_OK if all(r.passed for r in results) else EXIT_FAILED
    if as_json:
        return CommandOutcome(exit_code=code, payload=_dump([r.model_dump() for r in results]))
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.graph} (a,d)={tuple(r.ad_progression) or None}" for r in results
    ]
    return CommandOutcome(exit_code=code, payload="\n".join(lines))


@cli.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Serve the HTTP API with uvicorn."""
    import uvicorn

    uvicorn.run("main:app", host=host, port=port)
    return CommandOutcome(exit_code=EXIT_OK)


def run(argv: Optional[Sequence[str]] = None) -> CommandOutcome:
    args: List[str] = list(sys.argv[1:] if argv is None else argv)
    get_settings()
    as_json = "--json" in args
    try:
        result = cli.main(args=args, prog_name="antimagic", standalone_mode=False)
    except click.UsageError as e:
        usage = e.ctx.get_usage() if e.ctx is not None else ""
        return CommandOutcome(exit_code=EXIT_USAGE, payload=f"{usage}\nError: {e.format_message()}".strip())
    except click.exceptions.Abort:
        return CommandOutcome(exit_code=EXIT_USAGE, payload="Aborted")
    except AntimagicError as e:
        code = EXIT_USAGE if isinstance(e, InvalidParameters) else EXIT_REFUSED
        if as_json:
            return CommandOutcome(exit_code=code, payload=_dump({"error": e.code, "message": e.message}))
        return CommandOutcome(exit_code=code, payload=f"{e.code}: {e.message}")
    if isinstance(result, CommandOutcome):
        return result
    return CommandOutcome(exit_code=result or EXIT_OK)


def main():
    outcome = run()
    if outcome.payload:
        click.echo(outcome.payload, err=outcome.exit_code in (EXIT_USAGE, EXIT_REFUSED))
    sys.exit(outcome.exit_code)


if __name__ == "__main__":
    main()
