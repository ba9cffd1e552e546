"""Command-line client. Parses graph input locally, then talks to the HTTP
service: an in-process app by default, or a remote server via --server.

stdout carries exactly one JSON document per invocation; diagnostics and
--pretty tables go to stderr. Exit codes: 0 success (and, for classify, a
consistent report), 1 input or budget error, 2 internal consistency error.
"""
from __future__ import annotations

import json
import sys

import click

from .errors import GraphParseError
from .graph import parse_graph, serialize_graph, Graph

EXIT_INPUT = 1
EXIT_INCONSISTENT = 2


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from .service import app

    return TestClient(app, raise_server_exceptions=False)


def _read_graph(ctx, input_path: str) -> dict:
    if input_path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(input_path) as handle:
                text = handle.read()
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)
    try:
        g = parse_graph(text, ctx.obj["format"])
    except GraphParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def _post(ctx, endpoint: str, payload: dict) -> dict:
    with _client(ctx.obj["server"]) as client:
        response = client.post(endpoint, json=payload)
    body = response.json()
    if response.status_code >= 400:
        error = body.get("error", {}) if isinstance(body, dict) else {}
        kind = error.get("type", "input")
        message = error.get("message", str(body))
        click.echo(f"error ({kind}): {message}", err=True)
        sys.exit(EXIT_INCONSISTENT if kind == "consistency" else EXIT_INPUT)
    return body


def _emit(data: dict):
    click.echo(json.dumps(data, separators=(",", ":")))


@click.group()
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["edge-list", "json"]),
    default="edge-list",
    help="Graph input/output text format.",
)
@click.option("--k-max", type=int, default=3, help="Level bound for per-level checks.")
@click.option("--budget", type=int, default=1 << 24, help="Enumeration budget.")
@click.option("--server", default=None, help="Remote service URL; default in-process.")
@click.option("--pretty", is_flag=True, help="Also print a readable table to stderr.")
@click.pass_context
def main(ctx, fmt, k_max, budget, server, pretty):
    """Classify graphs by the structure of their basic k-covers."""
    ctx.obj = {
        "format": fmt,
        "k_max": k_max,
        "budget": budget,
        "server": server,
        "pretty": pretty,
    }


@main.command()
@click.argument("input_path", default="-")
@click.option(
    "--counterexample-level",
    type=int,
    default=0,
    help="Search bound for a domain counterexample witness (0 disables).",
)
@click.pass_context
def classify(ctx, input_path, counterexample_level):
    """Full classification report for one graph."""
    payload = {
        "graph": _read_graph(ctx, input_path),
        "k_max": ctx.obj["k_max"],
        "budget": ctx.obj["budget"],
        "counterexample_max_level": counterexample_level,
    }
    report = _post(ctx, "/classify", payload)
    _emit(report)
    if ctx.obj["pretty"]:
        for key in ("sc", "wsc", "msc", "unmixed", "domain", "consistent"):
            click.echo(f"{key:>10}: {report[key]}", err=True)
        conds = " ".join(
            f"({i}){'T' if report['msc_conditions'][str(i)] else 'F'}"
            for i in range(1, 9)
        )
        click.echo(f"conditions: {conds}", err=True)
    if not report["consistent"]:
        sys.exit(EXIT_INCONSISTENT)


@main.command()
@click.argument("input_path", default="-")
@click.option("--k", type=int, default=1, help="Cover level.")
@click.option(
    "--basic-only/--no-basic-only",
    default=True,
    help="Enumerate only basic covers (the only supported mode).",
)
@click.option(
    "--indecomposable",
    is_flag=True,
    help="Only 2-covers that are not sums of two 1-covers (requires --k 2).",
)
@click.pass_context
def covers(ctx, input_path, k, basic_only, indecomposable):
    """Enumerate the basic k-covers of a graph."""
    if not basic_only:
        raise click.UsageError("non-basic enumeration is not supported")
    if indecomposable and k != 2:
        raise click.UsageError("--indecomposable requires --k 2")
    payload = {
        "graph": _read_graph(ctx, input_path),
        "k": k,
        "indecomposable": indecomposable,
        "budget": ctx.obj["budget"],
    }
    result = _post(ctx, "/covers", payload)
    _emit(result)
    if ctx.obj["pretty"]:
        for cover in result["covers"]:
            click.echo(" ".join(str(p) for p in cover["prices"]), err=True)


@main.command()
@click.argument("input_path", default="-")
@click.option("--power", type=int, default=1, help="Symbolic power to expand.")
@click.option(
    "--monomial-strings",
    is_flag=True,
    help="Additionally render generators as monomial strings.",
)
@click.pass_context
def ideal(ctx, input_path, power, monomial_strings):
    """Generators of a symbolic power of the cover ideal, as exponent arrays."""
    payload = {
        "graph": _read_graph(ctx, input_path),
        "power": power,
        "budget": ctx.obj["budget"],
    }
    result = _post(ctx, "/ideal", payload)
    if monomial_strings:
        result["monomial_strings"] = [
            _monomial(exponents) for exponents in result["generators"]
        ]
    _emit(result)


def _monomial(exponents) -> str:
    parts = []
    for i, e in enumerate(exponents, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


@main.command()
@click.argument("input_path", required=False)
@click.option("--family", default=None, help="cycle, path, complete, "
              "complete-bipartite, random, random-bipartite.")
@click.option("--n", type=int, default=None)
@click.option("--a", type=int, default=None)
@click.option("--b", type=int, default=None)
@click.option("--p", "edge_probability", type=float, default=0.5)
@click.option("--seed", type=int, default=0)
@click.option("--plus", is_flag=True, help="Attach a pendant to every vertex.")
@click.option(
    "--prime",
    is_flag=True,
    help="Attach pendants at the vertices isolated in the derived graph.",
)
@click.pass_context
def construct(ctx, input_path, family, n, a, b, edge_probability, seed, plus, prime):
    """Emit a generated or pendant-augmented graph."""
    if plus and prime:
        raise click.UsageError("--plus and --prime are mutually exclusive")
    payload = {
        "family": family,
        "n": n,
        "a": a,
        "b": b,
        "edge_probability": edge_probability,
        "seed": seed,
        "plus": plus,
        "prime": prime,
        "budget": ctx.obj["budget"],
    }
    if plus or prime:
        if input_path is None and not sys.stdin.isatty():
            input_path = "-"
        if input_path is None:
            raise click.UsageError("pendant constructions need an input graph")
        payload["base"] = _read_graph(ctx, input_path)
    elif family is None:
        raise click.UsageError("specify --family, --plus or --prime")
    result = _post(ctx, "/construct", payload)
    g = Graph.of(result["n"], [tuple(e) for e in result["edges"]])
    click.echo(serialize_graph(g, ctx.obj["format"]), nl=False)


@main.command()
@click.option("--max-n", type=int, default=6, help="Exhaustive corpus bound.")
@click.option("--seed", type=int, default=0)
@click.option("--samples", type=int, default=100, help="Random graphs to sample.")
@click.pass_context
def suite(ctx, max_n, seed, samples):
    """Run every quantified invariant over an exhaustive corpus."""
    payload = {
        "max_n": max_n,
        "seed": seed,
        "samples": samples,
        "budget": ctx.obj["budget"],
    }
    result = _post(ctx, "/suite", payload)
    for check in result["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        click.echo(f"{status} {check['name']} ({check['checked']} cases)")
        for failure in check["failures"]:
            click.echo(f"  {failure['graph']}  {failure['message']}", err=True)
    if not result["passed"]:
        sys.exit(EXIT_INPUT)


if __name__ == "__main__":
    main()
