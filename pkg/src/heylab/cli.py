"""Command-line front end: reproducible experiments with JSON/DOT output.

Exit codes: 0 success / verification passed, 1 invalid input, 2 budget
exceeded, 3 verification failed or search unsuccessful.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Optional

import click

from . import verify as verify_mod
from .algebra import algebra_from_json, algebra_of
from .colouring import (
    Colouring,
    find_k_colouring,
    initial_partition,
    omega_types,
    refine_once,
)
from .corpus import DEFAULT_SEED
from .errors import BudgetExceeded, HeylabError
from .ladder import LadderSpec, build_ladder
from .poset import (
    enumerate_upsets,
    is_upset_mask,
    iter_bits,
    poset_from_json,
    poset_to_dot,
    poset_to_json,
)
from .subalgebra import generate
from .variety import algebra_product

EXIT_INVALID = 1
EXIT_BUDGET = 2
EXIT_FAILED = 3


@dataclass
class RunConfig:
    budget_upsets: int
    budget_tuples: int
    seed: int
    fmt: str
    out: Optional[str]


def _emit(cfg: RunConfig, payload, *, text: Optional[str] = None) -> None:
    if cfg.fmt == "text" and text is not None:
        body = text
    elif isinstance(payload, str):
        body = payload
    else:
        body = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(body)
    else:
        click.echo(body, nl=False)


def _fail(msg: str, code: int) -> None:
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


def _load_poset(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
        return poset_from_json(data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        _fail(f"cannot read poset file {path}: {e}", EXIT_INVALID)
    except BudgetExceeded as e:
        _fail(str(e), EXIT_BUDGET)
    except HeylabError as e:
        _fail(str(e), EXIT_INVALID)


def _parse_upsets(P, specs) -> list:
    """Each spec is a comma-separated list of point names; must be up-closed."""
    masks = []
    for spec in specs:
        names = [s for s in spec.split(",") if s]
        try:
            mask = P.mask_of_names(names)
        except HeylabError as e:
            _fail(str(e), EXIT_INVALID)
        if not is_upset_mask(P, mask):
            _fail(f"{spec!r} is not an upset", EXIT_INVALID)
        masks.append(mask)
    return masks


@click.group()
@click.option("--budget-upsets", default=1 << 20, show_default=True)
@click.option("--budget-tuples", default=1 << 20, show_default=True)
@click.option("--seed", default=DEFAULT_SEED, show_default=True)
@click.option(
    "--format", "fmt", type=click.Choice(["json", "text", "dot"]), default="json"
)
@click.option("--out", default=None, help="Write output to this file.")
@click.pass_context
def main(ctx, budget_upsets, budget_tuples, seed, fmt, out):
    """Heyting algebras of upsets, poset colourings, and ladder experiments."""
    if budget_upsets <= 0 or budget_tuples <= 0:
        _fail("budgets must be positive", EXIT_INVALID)
    ctx.obj = RunConfig(budget_upsets, budget_tuples, seed, fmt, out)


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--depth", required=True, type=int)
@click.option("--with-bottom/--no-bottom", default=True)
@click.option("--dot", is_flag=True, help="Emit DOT instead of JSON.")
@click.pass_obj
def ladder(cfg: RunConfig, n, depth, with_bottom, dot):
    """Build a ladder truncation and print it as poset JSON or DOT."""
    try:
        spec = LadderSpec(n, depth, with_bottom)
        P = build_ladder(spec, max_points=cfg.budget_upsets)
    except ValueError as e:
        _fail(str(e), EXIT_INVALID)
    except BudgetExceeded as e:
        _fail(str(e), EXIT_BUDGET)
    if dot or cfg.fmt == "dot":
        _emit(cfg, poset_to_dot(P))
    else:
        _emit(cfg, poset_to_json(P))


@main.command()
@click.argument("poset_file")
@click.pass_obj
def upsets(cfg: RunConfig, poset_file):
    """List every upset of a poset in canonical order."""
    P = _load_poset(poset_file)
    try:
        us = enumerate_upsets(P, cfg.budget_upsets)
    except BudgetExceeded as e:
        _fail(str(e), EXIT_BUDGET)
    payload = {
        "seed": cfg.seed,
        "count": len(us),
        "upsets": [sorted(u.members) for u in us],
    }
    _emit(cfg, payload)


@main.command()
@click.argument("poset_file")
@click.pass_obj
def algebra(cfg: RunConfig, poset_file):
    """Export the full upset Heyting algebra with operation tables."""
    P = _load_poset(poset_file)
    try:
        A = algebra_of(P, cfg.budget_upsets)
    except BudgetExceeded as e:
        _fail(str(e), EXIT_BUDGET)
    payload = A.to_json()
    payload["seed"] = cfg.seed
    _emit(cfg, payload)


@main.command()
@click.argument("poset_file")
@click.option("--colour", "colours", multiple=True,
              help="One upset as comma-separated point names; repeatable.")
@click.option("--stage", default=None, type=int,
              help="Finite refinement stage (default: omega).")
@click.pass_obj
def types(cfg: RunConfig, poset_file, colours, stage):
    """Type partition of a poset under a colouring."""
    P = _load_poset(poset_file)
    masks = _parse_upsets(P, colours)
    c = Colouring.from_masks(P, masks)
    if stage is None:
        t = omega_types(P, c)
    else:
        if stage < 0:
            _fail("stage must be >= 0", EXIT_INVALID)
        t = initial_partition(P, c)
        for _ in range(stage):
            t = refine_once(t)
    payload = t.to_json()
    payload["seed"] = cfg.seed
    _emit(cfg, payload)


@main.command("colour-search")
@click.argument("poset_file")
@click.option("--k", required=True, type=int)
@click.pass_obj
def colour_search(cfg: RunConfig, poset_file, k):
    """Exhaustive search for a k-colouring; exits 3 when none exists."""
    if k < 0:
        _fail("k must be >= 0", EXIT_INVALID)
    P = _load_poset(poset_file)
    try:
        c = find_k_colouring(P, k, cfg.budget_upsets, cfg.budget_tuples)
    except BudgetExceeded as e:
        _fail(str(e), EXIT_BUDGET)
    if c is None:
        _emit(cfg, {"seed": cfg.seed, "k": k, "found": False})
        sys.exit(EXIT_FAILED)
    _emit(
        cfg,
        {
            "seed": cfg.seed,
            "k": k,
            "found": True,
            "colours": [sorted(u.members) for u in c.colours],
        },
    )


@main.command("generate")
@click.argument("poset_file")
@click.option("--gen", "gens", multiple=True,
              help="One generator upset as comma-separated point names.")
@click.pass_obj
def generate_cmd(cfg: RunConfig, poset_file, gens):
    """Rank-stratified generated subalgebra with witness terms."""
    P = _load_poset(poset_file)
    masks = _parse_upsets(P, gens)
    try:
        ra = generate(P, masks, cfg.budget_upsets)
    except BudgetExceeded as e:
        _fail(str(e), EXIT_BUDGET)
    elems = sorted(ra.elements)
    payload = {
        "seed": cfg.seed,
        "generators": [sorted(iter_bits(m)) for m in masks],
        "size": len(elems),
        "elements": [
            {
                "upset": sorted(iter_bits(m)),
                "rank": ra.ranks[m],
                "witness": ra.witness_text(m),
            }
            for m in elems
        ],
    }
    _emit(cfg, payload)


@main.command()
@click.argument("lemma")
@click.option("--corpus", default=None, help="e.g. exhaustive5,random200:2718")
@click.option("--n", default=None, type=int)
@click.option("--depth", default=None, type=int)
@click.option("--depths", default=None, help="Comma-separated depth list.")
@click.option("--k", default=None, type=int)
@click.option("--samples", default=None, type=int)
@click.option("--gens-per-poset", default=None, type=int)
@click.option("--max-stage", default=None, type=int)
@click.pass_obj
def verify(cfg: RunConfig, lemma, corpus, n, depth, depths, k, samples,
           gens_per_poset, max_stage):
    """Run a named lemma verification; exits 3 when it fails."""
    kwargs = {
        "corpus": corpus,
        "n": n,
        "depth": depth,
        "k": k,
        "samples": samples,
        "gens_per_poset": gens_per_poset,
        "max_stage": max_stage,
    }
    if depths is not None:
        try:
            kwargs["depths"] = [int(d) for d in depths.split(",")]
        except ValueError:
            _fail(f"bad depth list {depths!r}", EXIT_INVALID)
    if lemma in ("rank-type", "duality", "collapse", "next-level", "oracle"):
        kwargs["seed"] = cfg.seed
    elif lemma == "non-colourable" and samples is not None:
        kwargs["seed"] = cfg.seed
    try:
        report = verify_mod.run_verification(lemma, **kwargs)
    except BudgetExceeded as e:
        _fail(str(e), EXIT_BUDGET)
    except (ValueError, TypeError, HeylabError) as e:
        _fail(str(e), EXIT_INVALID)
    report["seed_global"] = cfg.seed
    _emit(cfg, report)
    if not report["passed"]:
        sys.exit(EXIT_FAILED)


@main.command()
@click.option("--n", default=1, show_default=True, type=int)
@click.option("--depths", default="4,5,6,7,8", show_default=True)
@click.pass_obj
def strictness(cfg: RunConfig, n, depths):
    """Strict-generation report for ladder truncations."""
    try:
        depth_list = [int(d) for d in depths.split(",")]
    except ValueError:
        _fail(f"bad depth list {depths!r}", EXIT_INVALID)
    if n < 0 or any(d < 1 for d in depth_list):
        _fail("n must be >= 0 and depths >= 1", EXIT_INVALID)
    try:
        report = verify_mod.verify_strictness(
            n, depth_list, cfg.budget_upsets, cfg.budget_upsets
        )
    except BudgetExceeded as e:
        _fail(str(e), EXIT_BUDGET)
    report["seed"] = cfg.seed
    text = _strictness_text(report)
    _emit(cfg, report, text=text)
    if not report["passed"]:
        sys.exit(EXIT_FAILED)


def _strictness_text(report: dict) -> str:
    rows = report["rows"]
    header = f"{'depth':>6} {'|Up(P)|':>8} {'max-gen':>8} {'canonical-full':>15}"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r['depth']:>6} {r['algebra_size']:>8} "
            f"{r['max_k_generated_size']:>8} "
            f"{str(r['canonical_generates_full']):>15}"
        )
    lines.append(f"passed: {report['passed']}")
    return "\n".join(lines) + "\n"


@main.command()
@click.argument("algebra_a")
@click.argument("algebra_b")
@click.pass_obj
def product(cfg: RunConfig, algebra_a, algebra_b):
    """Componentwise product of two exported algebras."""
    algebras = []
    for path in (algebra_a, algebra_b):
        try:
            with open(path) as fh:
                algebras.append(algebra_from_json(json.load(fh)))
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as e:
            _fail(f"cannot read algebra file {path}: {e}", EXIT_INVALID)
    try:
        prod = algebra_product(algebras[0], algebras[1], cfg.budget_upsets)
    except BudgetExceeded as e:
        _fail(str(e), EXIT_BUDGET)
    payload = prod.to_json()
    payload["seed"] = cfg.seed
    _emit(cfg, payload)


if __name__ == "__main__":
    main()
