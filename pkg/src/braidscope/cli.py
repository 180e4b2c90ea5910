"""Command line entry point: ``braidscope {gen,compute,verify,vk,export}``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

from . import config_space as cs
from .errors import BraidscopeError, InvalidInput
from .graph import Graph, make_cycle, make_path, make_star, make_sun, subdivide_for
from .presentation import fundamental_presentation
from .sun_models import FAMILIES, report_json, report_table, verify_family
from .tietze import DEFAULT_BUDGET, tietze_simplify
from .van_kampen import GvkInput, gvk_pushout

BUDGET_ENV = "BRAIDSCOPE_BUDGET"
COMMANDS = ("gen", "compute", "verify", "vk", "export")


class UsageError(BraidscopeError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    graph_spec: str = ""
    tokens: int = 1
    subdivide: str = "auto"
    certify: bool = False
    euler: bool = False
    format: str = "text"
    budget: int = DEFAULT_BUDGET
    base: tuple[int, ...] | None = None
    family: str = ""
    param_min: int = 1
    param_max: int = 1
    input: str = ""

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.tokens < 1:
            raise UsageError("--tokens must be at least 1")
        if self.budget < 1:
            raise UsageError("--budget must be at least 1")
        if self.subdivide not in ("auto", "off"):
            raise UsageError("--subdivide is auto or off")
        if self.format not in ("text", "json", "dot"):
            raise UsageError("--format is text, json or dot")


def parse_graph_spec(spec: str) -> Graph:
    kind, _, arg = spec.partition(":")
    builders = {"sun": make_sun, "star": make_star, "cycle": make_cycle, "path": make_path}
    if kind in builders and arg:
        try:
            return builders[kind](int(arg))
        except ValueError as exc:
            raise UsageError(f"bad graph spec {spec!r}: {exc}") from exc
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"graph spec {spec!r} is neither kind:size nor a readable JSON file")
    try:
        return Graph.from_json(path.read_text())
    except (json.JSONDecodeError, InvalidInput) as exc:
        raise UsageError(f"cannot read graph from {spec}: {exc}") from exc


def _graph(cfg: RunConfig, err: TextIO) -> Graph:
    g = parse_graph_spec(cfg.graph_spec)
    if cfg.subdivide == "auto":
        return subdivide_for(g, cfg.tokens)
    print("warning: --subdivide off; the discrete complex may not model the "
          "configuration space faithfully", file=err)
    return g


def _compute(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    g = _graph(cfg, err)
    cx = cs.enumerate_complex(g, cfg.tokens, base=cfg.base)
    if cfg.format == "dot":
        out.write(cx.to_dot())
        return 0
    pres = fundamental_presentation(cx)
    result = tietze_simplify(pres, cfg.budget)
    rank = result.free_rank
    data = {
        "graph": g.to_dict(),
        "tokens": cfg.tokens,
        "cells": cx.counts(),
        "generators": pres.rank,
        "relators": len(pres.relators),
        "converged": result.converged,
        "rank": rank,
    }
    if cfg.euler:
        counts = cs.count_cells_all_dims(g, cfg.tokens)
        data["counts_all_dims"] = counts
        data["euler_characteristic"] = sum((-1) ** d * c for d, c in enumerate(counts))
    if cfg.certify:
        data["simplified"] = result.presentation.to_dict()
    if cfg.format == "json":
        out.write(json.dumps(data, sort_keys=True) + "\n")
        return 0
    out.write(f"graph: {g.vertex_count} vertices, {g.edge_count} edges\n")
    out.write(f"tokens: {cfg.tokens}\n")
    out.write("cells: " + " ".join(f"dim{d}={c}" for d, c in enumerate(cx.counts())) + "\n")
    out.write(f"presentation: {pres.rank} generators, {len(pres.relators)} relators\n")
    out.write(f"rank: {'unknown' if rank is None else rank}\n")
    if cfg.euler:
        out.write(f"counts (all dims): {data['counts_all_dims']}\n")
        out.write(f"chi: {data['euler_characteristic']}\n")
    if cfg.certify:
        out.write("simplified presentation:\n" + result.presentation.to_text())
    return 0


def run(cfg: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    if cfg.command == "gen":
        out.write(_graph(cfg, err).to_json() + "\n")
        return 0
    if cfg.command == "compute":
        return _compute(cfg, out, err)
    if cfg.command == "export":
        out.write(cs.enumerate_complex(_graph(cfg, err), cfg.tokens, base=cfg.base).to_dot())
        return 0
    if cfg.command == "verify":
        reports = verify_family(cfg.family, range(cfg.param_min, cfg.param_max + 1), cfg.budget)
        out.write(report_json(reports) + "\n" if cfg.format == "json" else report_table(reports))
        return 0 if all(r.status == "pass" for r in reports) else 1
    # vk
    try:
        inp = GvkInput.from_json(Path(cfg.input).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {cfg.input}: {exc}") from exc
    pres = gvk_pushout(inp)
    if cfg.format == "json":
        data = {"presentation": pres.to_dict()}
        if cfg.certify:
            data["rank"] = tietze_simplify(pres, cfg.budget).free_rank
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write(pres.to_text())
        if cfg.certify:
            rank = tietze_simplify(pres, cfg.budget).free_rank
            out.write(f"rank: {'unknown' if rank is None else rank}\n")
    return 0


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _base(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--base expects comma-separated vertex ids, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidscope", description="Braid groups of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, tokens_default):
        p.add_argument("--graph", required=True, help="sun:k | star:k | cycle:m | path:m | graph.json")
        p.add_argument("--tokens", type=int, default=tokens_default)
        p.add_argument("--subdivide", choices=("auto", "off"), default="auto")

    p = sub.add_parser("gen", help="emit a graph as JSON")
    graph_args(p, 1)

    p = sub.add_parser("compute", help="cell counts, presentation and certified rank")
    graph_args(p, 2)
    p.add_argument("--certify", action="store_true", help="also print the simplified presentation")
    p.add_argument("--euler", action="store_true", help="also count all cells and report chi")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--budget", type=int)
    p.add_argument("--base", help="comma-separated vertices of the base configuration")

    p = sub.add_parser("verify", help="check a family against its expected ranks")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--min", dest="param_min", type=int)
    p.add_argument("--max", dest="param_max", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=int)

    p = sub.add_parser("vk", help="Van Kampen pushout of a JSON input")
    vk = p.add_subparsers(dest="vk_command", required=True)
    q = vk.add_parser("pushout")
    q.add_argument("--input", required=True)
    q.add_argument("--certify", action="store_true")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--budget", type=int)

    p = sub.add_parser("export", help="DOT of the 1-skeleton")
    graph_args(p, 2)
    p.add_argument("--base")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    budget = getattr(ns, "budget", None)
    kw = dict(command=ns.command, budget=budget if budget is not None else _default_budget())
    for name in ("tokens", "subdivide", "certify", "euler", "format", "family", "input"):
        if getattr(ns, name, None) is not None:
            kw[name] = getattr(ns, name)
    if getattr(ns, "graph", None) is not None:
        kw["graph_spec"] = ns.graph
    kw["base"] = _base(getattr(ns, "base", None))
    if ns.command == "verify":
        low = 1 if ns.family == "sun_k_2tokens" else 2
        kw["param_min"] = ns.param_min if ns.param_min is not None else low
        kw["param_max"] = ns.param_max
    if ns.command == "export":
        kw["format"] = "dot"
    return RunConfig(**kw)


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except UsageError as exc:
        print(f"braidscope: error: {exc}", file=sys.stderr)
        return 2
    try:
        return run(cfg)
    except UsageError as exc:
        print(f"braidscope: error: {exc}", file=sys.stderr)
        return 2
    except BraidscopeError as exc:
        print(f"braidscope: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
