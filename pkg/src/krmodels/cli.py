"""Thin command-line client for the krmodels service.

Every subcommand builds a JSON request and posts it to the FastAPI app,
in-process by default or to a remote server via --url, then renders the
response.  Exit codes: 0 success, 1 usage error, 2 validation failure.
"""

from __future__ import annotations

import json
import sys

import click
import httpx

from .tableaux import column_to_text, parse_column

click.UsageError.exit_code = 1


def _client(url: str | None) -> httpx.Client:
    if url:
        return httpx.Client(base_url=url, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # starlette 1.3 deprecates its httpx-backed TestClient in favour of
        # an httpx2 package that is not on the index yet
        warnings.filterwarnings("ignore", message="Using `httpx`")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(ctx: click.Context, path: str, payload: dict) -> dict:
    with _client(ctx.obj.get("url")) as client:
        response = client.post(path, json=payload)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail")
        except Exception:
            detail = response.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(2)
    return response.json()


def _parse_partition(text: str) -> list[int]:
    text = text.strip()
    if not text or text == "0":
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise click.UsageError(f"cannot parse partition {text!r}")


def _parse_element(text: str) -> list[list[int]]:
    body = text.strip()
    if body.startswith("["):
        chunks = [c.rstrip("]") for c in body.split("[") if c != ""]
    else:
        chunks = body.split("/")
    return [list(parse_column(chunk)) for chunk in chunks]


type_option = click.option("--type", "family", type=click.Choice(["A", "B", "C", "D"]), required=True)
rank_option = click.option("--rank", type=int, required=True, help="ambient n (type A is A_{n-1})")
lambda_option = click.option("--lambda", "shape", default="", help="partition, e.g. 3,2")
format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "dot", "text"]), default="text"
)


@click.group()
@click.option("--url", default=None, help="base URL of a running service; default runs in-process")
@click.pass_context
def main(ctx: click.Context, url: str | None) -> None:
    """Quantum alcove model vs KN tableau model, with bijections."""
    ctx.ensure_object(dict)
    ctx.obj["url"] = url


@main.command()
@type_option
@rank_option
@lambda_option
@format_option
@click.pass_context
def chain(ctx, family, rank, shape, fmt):
    """Print and validate the lambda-chain."""
    data = _post(ctx, "/chain", {"family": family, "rank": rank, "shape": _parse_partition(shape)})
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(data["text"])
        click.echo(f"length {data['length']}, valid: {data['valid']}")
    if not data["valid"]:
        click.echo(f"invalid chain: {data['reason']}", err=True)
        sys.exit(2)


@main.command()
@type_option
@rank_option
@format_option
@click.option("--guard-max-w", type=int, default=100_000, help="largest Weyl group to expand")
@click.pass_context
def qbg(ctx, family, rank, fmt, guard_max_w):
    """Export the quantum Bruhat graph as DOT or JSON."""
    wire_fmt = "dot" if fmt == "dot" else "json"
    data = _post(
        ctx,
        "/qbg",
        {"family": family, "rank": rank, "format": wire_fmt, "guard": guard_max_w},
    )
    if fmt == "dot":
        click.echo(data["dot"])
    elif fmt == "json":
        click.echo(json.dumps(data["graph"], indent=2))
    else:
        click.echo(f"{data['vertices']} vertices, {data['edges']} edges")


@main.command()
@type_option
@rank_option
@lambda_option
@format_option
@click.option("--model", type=click.Choice(["alcove", "tableau"]), default="alcove")
@click.option("--guard-max-m", type=int, default=26, help="largest chain the enumerator expands")
@click.pass_context
def enumerate(ctx, family, rank, shape, fmt, model, guard_max_m):
    """List the admissible subsets A(lambda) or the tensor crystal."""
    data = _post(
        ctx,
        "/enumerate",
        {
            "family": family,
            "rank": rank,
            "shape": _parse_partition(shape),
            "model": model,
            "guard_max_m": guard_max_m,
        },
    )
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
        return
    for element in data["elements"]:
        if model == "alcove":
            positions = ",".join(str(p) for p in element["J"]) or "-"
            cols = "".join(f"[{column_to_text(c)}]" for c in element["sfill"])
            click.echo(f"J={positions}  sfill={cols}")
        else:
            click.echo("".join(f"[{column_to_text(c)}]" for c in element["columns"]))
    click.echo(f"count {data['count']}")


@main.command("map")
@type_option
@rank_option
@lambda_option
@format_option
@click.option("--J", "positions", required=True, help="folding positions, e.g. 1,2,3,5")
@click.pass_context
def map_command(ctx, family, rank, shape, fmt, positions):
    """Apply fill and sfill to an admissible subset."""
    data = _post(
        ctx,
        "/map",
        {
            "family": family,
            "rank": rank,
            "shape": _parse_partition(shape),
            "positions": _parse_partition(positions),
        },
    )
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(f"fill={data['fill_text']}")
        click.echo(f"sfill={data['sfill_text']}")


@main.command()
@type_option
@rank_option
@lambda_option
@format_option
@click.option("--element", required=True, help="columns like [2,3][1,2][1] or 2,3/1,2/1")
@click.option("--trace", is_flag=True, help="print the per-step pipeline trace")
@click.pass_context
def invert(ctx, family, rank, shape, fmt, element, trace):
    """Run the inverse pipeline on a tableau element."""
    data = _post(
        ctx,
        "/invert",
        {
            "family": family,
            "rank": rank,
            "shape": _parse_partition(shape),
            "element": _parse_element(element),
            "trace": trace,
        },
    )
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
        return
    click.echo("J=" + ",".join(str(p) for p in data["positions"]))
    if trace and data.get("trace"):
        for step in data["trace"]:
            root = step["root"]
            click.echo(
                f"segment {step['segment']} pos {step['position']} "
                f"({root['kind']} {root['i']},{root['j']}) {step['edge']}: "
                f"{step['window_before']} -> {step['window_after']}"
            )


@main.command()
@type_option
@rank_option
@click.option("--checks", default=None, help="comma list from: qbg, blockoff")
@click.pass_context
def verify(ctx, family, rank, checks):
    """Run the QBG-criteria and blocked-off oracles."""
    if checks is None:
        checks = "qbg" if family in ("A", "C") else "blockoff"
    data = _post(
        ctx,
        "/verify",
        {"family": family, "rank": rank, "checks": checks.split(",")},
    )
    for line in data["details"]:
        click.echo(line)
    if not data["passed"]:
        click.echo("verification failed", err=True)
        sys.exit(2)
    click.echo("all checks passed")


@main.command()
@type_option
@rank_option
@lambda_option
@click.option("--guard-max-m", type=int, default=26)
@click.pass_context
def roundtrip(ctx, family, rank, shape, guard_max_m):
    """Enumerate both models and check the bijection in both directions."""
    data = _post(
        ctx,
        "/roundtrip",
        {
            "family": family,
            "rank": rank,
            "shape": _parse_partition(shape),
            "guard_max_m": guard_max_m,
        },
    )
    click.echo(
        f"|A(lambda)| = {data['alcove_count']}, |B^(lambda')| = {data['tableau_count']}"
    )
    for line in data["details"]:
        click.echo(line)
    if not data["passed"]:
        click.echo("roundtrip failed", err=True)
        sys.exit(2)
    click.echo("all round trips pass")


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("krmodels.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
