"""Command-line front end.

Subcommands: construct, check, instantiate, encode, decode, simulate.
Exit codes: 0 success, 1 domain failure (failed check, undecodable word,
exhausted instantiation), 2 usage or parse error.

Vectors on the command line and on stdout are comma-separated decimals
without spaces.  Rows, columns, and error positions are printed 1-based;
the library API is 0-based.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import codec, simulate as sim
from .balance import construct_balanced_support
from .codec import (
    InstantiationError,
    error_decode,
    format_gm,
    instantiate,
    parse_gm,
)
from .field import field_size_bound
from .support import (
    check_p1,
    check_p2,
    check_p3_bruteforce,
    check_p3_matching,
    column_weights,
    format_sm,
    parse_sm,
)

__all__ = ["main"]


def _read_sm(path: str):
    try:
        return parse_sm(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise click.UsageError(f"cannot read support matrix {path}: {exc}")


def _read_gm(path: str):
    try:
        return parse_gm(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise click.UsageError(f"cannot read generator matrix {path}: {exc}")


def _parse_vector(text: str, expected_len: int, q: int, what: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise click.UsageError(f"{what} must be comma-separated integers, got {text!r}")
    if len(vals) != expected_len:
        raise click.UsageError(f"{what} must have {expected_len} symbols, got {len(vals)}")
    for v in vals:
        if not 0 <= v < q:
            raise click.UsageError(f"{what} symbol {v} outside [0, {q})")
    return vals


def _fmt_vector(vals) -> str:
    return ",".join(str(v) for v in vals)


def _fmt_rows_1based(rows) -> str:
    return "{" + ",".join(str(r + 1) for r in sorted(rows)) + "}"


@click.group()
def main():
    """Balanced sparsest generator matrices for MDS codes."""


@main.command()
@click.option("-n", type=int, required=True, help="Code length (number of sensors).")
@click.option("-k", type=int, required=True, help="Code dimension (number of conditions).")
@click.option("-o", "out_path", type=click.Path(), default=None,
              help="Output .sm path (default: n{n}k{k}.sm).")
@click.option("--plot", "plot_path", type=click.Path(), default=None,
              help="Also render the balancing-progress figure to this PNG.")
def construct(n, k, out_path, plot_path):
    """Build a balanced sparsest support matrix and write it as .sm."""
    if not 1 <= k <= n or n > 64:
        raise click.UsageError(f"need 1 <= k <= n <= 64, got n={n}, k={k}")
    m, trace = construct_balanced_support(n, k)
    out = Path(out_path) if out_path else Path(f"n{n}k{k}.sm")
    out.write_text(format_sm(m))
    out.with_suffix(".trace").write_text(trace.to_log_text())
    if plot_path:
        from .plots import save_trace_figure

        save_trace_figure(trace, plot_path)
    click.echo(f"wrote {out}")
    click.echo(f"column weights: {_fmt_vector(column_weights(m))}")
    click.echo(f"swaps: {len(trace)}")


@main.command()
@click.argument("path", type=click.Path())
@click.option("--property", "prop", type=click.Choice(["p1", "p2", "p3"]), required=True)
@click.option("--method", type=click.Choice(["brute", "matching"]), default="brute",
              show_default=True, help="P3 check method (ignored for p1/p2).")
def check(path, prop, method):
    """Check a .sm file for (P1), (P2), or (P3)."""
    m = _read_sm(path)
    if prop == "p1":
        ok, witness = check_p1(m), None
    elif prop == "p2":
        ok, witness = check_p2(m), None
    elif method == "brute":
        ok, witness = check_p3_bruteforce(m)
    else:
        if not check_p1(m):
            raise click.UsageError("matching method requires (P1); run --property p1 first")
        ok, witness = check_p3_matching(m)
    if ok:
        click.echo(f"PASS {prop}")
        return
    click.echo(f"FAIL {prop}")
    if witness is not None:
        click.echo(
            f"witness rows I = {_fmt_rows_1based(witness.violating_rows)}: "
            f"union size {witness.union_size} < required {witness.required}"
        )
    sys.exit(1)


@main.command("instantiate")
@click.argument("sm_path", type=click.Path())
@click.option("-q", "q_text", default="auto", show_default=True,
              help="Field size: a prime, or 'auto' for the smallest prime above C(n-1,k-1).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-attempts", type=int, default=64, show_default=True)
@click.option("--force", is_flag=True, help="Allow q at or below the C(n-1,k-1) bound.")
@click.option("-o", "out_path", type=click.Path(), default=None,
              help="Output .gm path (default: input with .gm suffix).")
def instantiate_cmd(sm_path, q_text, seed, max_attempts, force, out_path):
    """Instantiate a .sm support pattern into an MDS generator .gm file."""
    m = _read_sm(sm_path)
    if not check_p1(m):
        click.echo("input violates (P1): row weights are not all n-k+1", err=True)
        sys.exit(1)
    ok, witness = check_p3_bruteforce(m)
    if not ok:
        click.echo(
            f"input violates (P3): rows I = {_fmt_rows_1based(witness.violating_rows)}, "
            f"union size {witness.union_size} < required {witness.required}",
            err=True,
        )
        sys.exit(1)
    if q_text == "auto":
        q = None
    else:
        try:
            q = int(q_text)
        except ValueError:
            raise click.UsageError(f"-q must be an integer or 'auto', got {q_text!r}")
    try:
        g, attempts = instantiate(m, q=q, seed=seed, max_attempts=max_attempts,
                                  force_small_q=force)
    except ValueError as exc:
        bound = field_size_bound(m.n, m.k)
        click.echo(f"{exc} (bound C(n-1,k-1) = {bound}; use --force to override)", err=True)
        sys.exit(1)
    except InstantiationError as exc:
        click.echo(str(exc), err=True)
        sys.exit(1)
    out = Path(out_path) if out_path else Path(sm_path).with_suffix(".gm")
    out.write_text(format_gm(g))
    click.echo(f"wrote {out}")
    click.echo(f"q: {g.field.q}")
    click.echo(f"attempts: {attempts}")


@main.command()
@click.argument("gm_path", type=click.Path())
@click.argument("message")
def encode(gm_path, message):
    """Encode a comma-separated length-k message with a .gm generator."""
    g = _read_gm(gm_path)
    x = _parse_vector(message, g.k, g.field.q, "message")
    click.echo(_fmt_vector(codec.encode(g, x)))


@main.command()
@click.argument("gm_path", type=click.Path())
@click.argument("received")
def decode(gm_path, received):
    """Decode a comma-separated length-n received word; prints the message
    and the 1-based positions of identified errors."""
    g = _read_gm(gm_path)
    y = _parse_vector(received, g.n, g.field.q, "received word")
    result = error_decode(g, y)
    if result.status == "failure":
        click.echo(f"decoding failed: more than t={g.t} errors", err=True)
        sys.exit(1)
    click.echo(_fmt_vector(result.message))
    click.echo("[" + ",".join(str(j + 1) for j in sorted(result.error_positions)) + "]")


@main.command()
@click.option("-n", type=int, required=True)
@click.option("-k", type=int, required=True)
@click.option("-q", "q_text", default="auto", show_default=True)
@click.option("--errors", type=int, default=0, show_default=True,
              help="Corrupted sensors per trial.")
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print the JSON report instead of a table.")
@click.option("--outdir", type=click.Path(), default=None,
              help="Write report.json, matrix.gm, workload.csv, and workload.png here.")
def simulate(n, k, q_text, errors, trials, seed, as_json, outdir):
    """Run the sensor-network encode/corrupt/decode simulation."""
    if not 1 <= k <= n:
        raise click.UsageError(f"need 1 <= k <= n, got n={n}, k={k}")
    if q_text == "auto":
        q = None
    else:
        try:
            q = int(q_text)
        except ValueError:
            raise click.UsageError(f"-q must be an integer or 'auto', got {q_text!r}")
    try:
        cfg = sim.SimulationConfig(n=n, k=k, trials=trials, errors_per_trial=errors,
                                   seed=seed, q=q)
        report = sim.run_simulation(cfg)
    except (ValueError, InstantiationError) as exc:
        click.echo(f"simulation failed: {exc}", err=True)
        sys.exit(1)
    if outdir:
        from .plots import save_workload_figure

        out = Path(outdir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(report.to_json() + "\n")
        (out / "matrix.gm").write_text(report.gm)
        csv_lines = ["sensor,conditions"]
        csv_lines += [f"{j + 1},{w}" for j, w in enumerate(report.per_sensor_conditions)]
        (out / "workload.csv").write_text("\n".join(csv_lines) + "\n")
        save_workload_figure(report, str(out / "workload.png"))
    if as_json:
        click.echo(report.to_json())
    else:
        click.echo(report.to_table(), nl=False)


if __name__ == "__main__":
    main()
