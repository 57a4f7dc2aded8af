"""Command-line front end: simulate threads, detect trolls, inspect pairs.

Exit codes: 0 success, 1 I/O failure, 2 validation failure (bad spec,
malformed thread file, bad ranks), 3 degenerate clustering.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import replace

import click

from . import __version__
from .conflict import conflict, inclusion_degree, symmetric_inclusion
from .belief import jousselme_distance
from .errors import BeliefError, Degenerate
from .pipeline import analyze
from .simulate import BUILTIN_SCENARIOS, GENERATOR_ID, generate, spec_from_dict
from .thread import load_thread, thread_to_dict, write_json_atomic

EXIT_IO = 1
EXIT_INVALID = 2
EXIT_DEGENERATE = 3


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_thread_or_exit(path: str):
    try:
        return load_thread(path)
    except OSError as exc:
        _fail(EXIT_IO, f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        _fail(EXIT_INVALID, f"{path} is not valid JSON: {exc}")
    except BeliefError as exc:
        _fail(EXIT_INVALID, f"{path} is not a valid thread: {exc}")


@click.group()
@click.version_option(__version__, prog_name="trolldetect")
def main():
    """Conflict-based troll detection for discussion threads."""


@main.command()
@click.option(
    "--scenario",
    type=click.Choice(sorted(BUILTIN_SCENARIOS)),
    default=None,
    help="Use a built-in scenario.",
)
@click.option(
    "--spec", "spec_path", default=None, help="Read a scenario JSON file."
)
@click.option("--seed", type=int, default=None, help="Override the scenario seed.")
@click.option("--out", "out_path", required=True, help="Thread JSON output path.")
def simulate(scenario, spec_path, seed, out_path):
    """Generate a synthetic thread from a scenario."""
    if (scenario is None) == (spec_path is None):
        _fail(EXIT_INVALID, "give exactly one of --scenario or --spec")
    if scenario is not None:
        spec = BUILTIN_SCENARIOS[scenario]()
    else:
        try:
            with open(spec_path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except OSError as exc:
            _fail(EXIT_IO, f"cannot read {spec_path}: {exc}")
        except json.JSONDecodeError as exc:
            _fail(EXIT_INVALID, f"{spec_path} is not valid JSON: {exc}")
        try:
            spec = spec_from_dict(raw)
        except BeliefError as exc:
            _fail(EXIT_INVALID, f"invalid scenario: {exc}")
    if seed is not None:
        spec = replace(spec, seed=seed)
    try:
        thread = generate(spec)
    except BeliefError as exc:
        _fail(EXIT_INVALID, f"invalid scenario: {exc}")
    document = thread_to_dict(thread)
    document["meta"] = {
        "tool": "trolldetect",
        "version": __version__,
        "generator": GENERATOR_ID,
        "seed": spec.seed,
    }
    try:
        write_json_atomic(document, out_path)
    except OSError as exc:
        _fail(EXIT_IO, f"cannot write {out_path}: {exc}")
    click.echo(
        f"wrote {len(thread.messages)} messages by {len(thread.users)} users "
        f"to {out_path}"
    )


@main.command()
@click.option("--thread", "thread_path", required=True, help="Thread JSON file.")
@click.option(
    "--json", "json_path", default=None, help="Also write a JSON report here."
)
def detect(thread_path, json_path):
    """Score a thread's users and split them into trolls and others."""
    thread = _load_thread_or_exit(thread_path)
    started = time.perf_counter()
    try:
        report = analyze(thread)
    except Degenerate as exc:
        _fail(EXIT_DEGENERATE, f"cannot cluster users: {exc}")
    elapsed = time.perf_counter() - started

    click.echo("user conflict:")
    for user, value in report.per_user.items():
        click.echo(f"  {user:<8s} {value:.12f}")
    roster = list(report.per_user)
    trolls = " ".join(u for u in roster if u in report.trolls)
    others = " ".join(u for u in roster if u in report.others)
    click.echo(f"trolls (center {report.troll_center:.12f}): {trolls}")
    click.echo(f"others (center {report.other_center:.12f}): {others}")

    if json_path is not None:
        document = {
            "meta": {
                "tool": "trolldetect",
                "version": __version__,
                "input": str(thread_path),
                "elapsed_seconds": elapsed,
            },
            "report": report.to_dict(),
        }
        try:
            write_json_atomic(document, json_path)
        except OSError as exc:
            _fail(EXIT_IO, f"cannot write {json_path}: {exc}")


@main.command("conflict")
@click.option("--thread", "thread_path", required=True, help="Thread JSON file.")
@click.option("--a", "rank_a", type=int, required=True, help="First message rank.")
@click.option("--b", "rank_b", type=int, required=True, help="Second message rank.")
def conflict_pair(thread_path, rank_a, rank_b):
    """Inspect the conflict between two messages of a thread."""
    thread = _load_thread_or_exit(thread_path)
    try:
        first = thread.message(rank_a)
        second = thread.message(rank_b)
    except BeliefError as exc:
        _fail(EXIT_INVALID, str(exc))
    click.echo(f"message {rank_a} ({first.author}) vs message {rank_b} ({second.author})")
    click.echo(f"  inclusion degree a in b: {inclusion_degree(first.bba, second.bba):.12f}")
    click.echo(f"  inclusion degree b in a: {inclusion_degree(second.bba, first.bba):.12f}")
    click.echo(f"  symmetric inclusion    : {symmetric_inclusion(first.bba, second.bba):.12f}")
    click.echo(f"  distance               : {jousselme_distance(first.bba, second.bba):.12f}")
    click.echo(f"  conflict               : {conflict(first.bba, second.bba):.12f}")


if __name__ == "__main__":
    main()
