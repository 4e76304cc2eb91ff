"""Command-line front end.

Exit status: 0 success, 1 domain error (the error's name is printed),
2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import _kernels
from .bench import BENCH_COLUMNS, KERNEL_COLUMNS, bench_kernels, bench_orders
from .bounds import bound_report
from .bunch import bunch_size_ranges, bunch_sizes, embed, embedding_to_dict, full_bunch_orders, orders_to_dict
from .classify import base_orders, base_orders_to_dict, class_key, partition
from .errors import LinkError
from .gen import random_link
from .parent import (
    build_parent_diagram,
    count_crossings,
    dehn_recipe,
    diagram_to_dict,
    recipe_lines,
    recipe_to_dict,
    total_iota,
)
from .render import PALETTES, RenderOptions, render_parent_svg, render_template_svg
from .williams import Mode, verify_against_bunch
from .word import ModularLink, parse_link, render_word, split_link_text

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_FAIL = 0, 1, 2, 3

RUNNING_EXAMPLE = "x^10y^2x^5y^2x^7y^6x^2y^2x^5y^3"


class UsageError(Exception):
    pass


def _link_from_args(args) -> ModularLink:
    if not args.word:
        raise UsageError("--word is required")
    texts = [t for w in args.word for t in split_link_text(w)]
    return parse_link(texts)


def _colour(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR") is not None or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


# -- per-link operations (also used by batch) ---------------------------------


def op_normalize(link: ModularLink) -> tuple[dict, list[str]]:
    words = [
        {
            "text": render_word(w),
            "ks": list(w.ks),
            "ls": list(w.ls),
            "period": w.period,
            "shift": w.shift,
            "canonicalized": w.canonicalized,
        }
        for w in link.words
    ]
    return {"link": link.text(), "nbar": link.nbar, "words": words}, [link.text()]


def op_orders(link: ModularLink) -> tuple[dict, list[str]]:
    o = full_bunch_orders(link)
    d = {"link": link.text(), **orders_to_dict(o)}
    return d, ["x: " + " ".join(d["x_order"]), "y: " + " ".join(d["y_order"])]


def op_embed(link: ModularLink) -> tuple[dict, list[str]]:
    emb = embed(link)
    d = embedding_to_dict(emb)
    lines = [f"{iv:+d}: " + " ".join(f"{lab}^{rem}" for lab, rem in emb.bunches[iv]) for iv in emb.intervals()]
    return d, lines


def op_bunches(link: ModularLink) -> tuple[dict, list[str]]:
    sizes = bunch_sizes(link)
    d = {
        "link": link.text(),
        "sizes": {str(k): v for k, v in sizes.items()},
        "ranges": [list(r) for r in bunch_size_ranges(link)],
    }
    return d, [f"{k:+d}: {v}" for k, v in sizes.items()]


def op_verify(link: ModularLink, mode: str | None = None, backend: str | None = None) -> tuple[dict, list[str]]:
    rep = verify_against_bunch(link, embed(link), mode=mode, backend=backend)
    d = {"link": link.text(), "passed": rep.passed, "check": rep.check, "index": rep.index, "detail": rep.detail}
    return d, [f"{link.text()}: {rep}"]


def op_classify(link: ModularLink) -> tuple[dict, list[str]]:
    key = class_key(link).decode("ascii")
    d = {"link": link.text(), "key": key, "base_orders": base_orders_to_dict(base_orders(link))}
    return d, [key]


def op_parent(link: ModularLink) -> tuple[dict, list[str]]:
    dg = build_parent_diagram(link)
    rep = count_crossings(dg)
    iota = total_iota(link, dg)
    d = {"diagram": diagram_to_dict(dg), "crossings": rep.as_dict(), "iota_total": iota}
    lines = [f"{k}: {v}" for k, v in rep.as_dict().items()] + [f"iota_total: {iota}"]
    return d, lines


def op_recipe(link: ModularLink, lorenz: bool = False) -> tuple[dict, list[str]]:
    r = dehn_recipe(link, lorenz=lorenz)
    return {"link": link.text(), **recipe_to_dict(r)}, recipe_lines(r)


def op_bound(link: ModularLink, lorenz: bool = False) -> tuple[dict, list[str]]:
    d = bound_report(link, lorenz=lorenz).as_dict()
    return d, [f"{k}: {v}" for k, v in d.items()]


OPS: dict[str, Callable[[ModularLink], tuple[dict, list[str]]]] = {
    "normalize": op_normalize,
    "orders": op_orders,
    "embed": op_embed,
    "bunches": op_bunches,
    "verify": op_verify,
    "classify": op_classify,
    "parent": op_parent,
    "recipe": op_recipe,
    "bound": op_bound,
}


def _emit(fmt: str, payload: dict, lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


# -- batch workers (module level so they pickle) --------------------------------


def _batch_line(job: tuple[str, str, str]) -> str:
    op, fmt, text = job
    try:
        payload, lines = OPS[op](parse_link(text))
    except LinkError as err:
        return json.dumps({"input": text, "error": err.name}) if fmt == "json" else f"{text}: {err.name}"
    if fmt == "json":
        return json.dumps(payload, sort_keys=True)
    return " | ".join(lines)


def _verify_random(job: tuple[int, int, int, int, int, str | None, str | None]) -> tuple[str, bool, str]:
    seed, index, max_period, max_exp, max_components, mode, backend = job
    rng = np.random.default_rng([seed, index])
    link = random_link(rng, max_period, max_exp, max_components)
    rep = verify_against_bunch(link, embed(link), mode=mode, backend=backend)
    return link.text(), rep.passed, str(rep)


def _map(fn, jobs: list, workers: int) -> list:
    if workers <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


# -- command handlers -------------------------------------------------------


def cmd_simple(args) -> int:
    link = _link_from_args(args)
    kw = {}
    if args.command in ("recipe", "bound"):
        kw["lorenz"] = args.lorenz
    payload, lines = OPS[args.command](link, **kw)
    _emit(args.format, payload, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.random is None:
        link = _link_from_args(args)
        payload, lines = op_verify(link, args.mode, args.backend)
        if args.format == "text":
            lines = [_colour(line, "32" if payload["passed"] else "31") for line in lines]
        _emit(args.format, payload, lines)
        return EXIT_OK if payload["passed"] else EXIT_FAIL
    jobs = [
        (args.seed, i, args.max_period, args.max_exp, args.max_components, args.mode, args.backend)
        for i in range(args.random)
    ]
    results = _map(_verify_random, jobs, args.jobs)
    failures = [{"link": t, "report": r} for t, ok, r in results if not ok]
    payload = {"checked": len(results), "passed": len(results) - len(failures), "failures": failures}
    lines = [f"{f['link']}: {f['report']}" for f in failures]
    summary = f"{payload['passed']}/{payload['checked']} PASS"
    lines.append(_colour(summary, "31" if failures else "32"))
    _emit(args.format, payload, lines)
    return EXIT_FAIL if failures else EXIT_OK


def _read_links(path: str) -> list[str]:
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from err
    return [line.strip() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]


def cmd_classify(args) -> int:
    if args.against is None:
        return cmd_simple(args)
    texts = ([",".join(args.word)] if args.word else []) + _read_links(args.against)
    links = [parse_link(t) for t in texts]
    groups = partition(links)
    payload = {
        "classes": [
            {"key": class_key(links[g[0]]).decode("ascii"), "links": [links[i].text() for i in g]} for g in groups
        ]
    }
    lines = [" ; ".join(links[i].text() for i in g) for g in groups]
    _emit(args.format, payload, lines)
    return EXIT_OK


def cmd_render(args) -> int:
    link = _link_from_args(args)
    opts = RenderOptions(unit=args.unit, palette=args.palette, show_unused=not args.hide_unused)
    if args.kind == "template":
        svg = render_template_svg(embed(link), opts)
    else:
        svg = render_parent_svg(build_parent_diagram(link), opts)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _scales(text: str) -> list[int]:
    try:
        out = [int(s) for s in text.split(",") if s.strip()]
    except ValueError as err:
        raise UsageError(f"bad --scales {text!r}") from err
    if not out or min(out) < 1:
        raise UsageError("--scales needs positive integers")
    return out


def cmd_bench(args) -> int:
    link = parse_link([t for w in (args.word or [RUNNING_EXAMPLE]) for t in split_link_text(w)])
    scales = _scales(args.scales)
    if args.kernels:
        print(",".join(KERNEL_COLUMNS))
        for backend, s, m, t in bench_kernels(link, scales, args.repeats):
            print(f"{backend},{s},{m},{t:.6e}")
        return EXIT_OK
    print(",".join(BENCH_COLUMNS))
    for row in bench_orders(link, scales, args.repeats, backend=args.backend):
        print(row.csv())
    return EXIT_OK


def cmd_batch(args) -> int:
    texts = _read_links(args.input)
    for line in _map(_batch_line, [(args.op, args.format, t) for t in texts], args.jobs):
        print(line)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit with status 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bunchlinks", description="Lorenz and modular link tools")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help: str, handler, word=True):
        sp = sub.add_parser(name, help=help)
        if word:
            sp.add_argument("--word", action="append", help="a Lorenz word; repeat or comma-separate for links")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.set_defaults(handler=handler)
        return sp

    add("normalize", "canonical rotation of each word", cmd_simple)
    add("orders", "full x- and y-bunch orders", cmd_simple)
    add("embed", "split-template embedding", cmd_simple)
    add("bunches", "bunch sizes per interval", cmd_simple)
    sp = add("verify", "check the embedding against the lexicographic order", cmd_verify)
    sp.add_argument("--random", type=int, metavar="N")
    sp.add_argument("--max-period", type=int, default=6)
    sp.add_argument("--max-exp", type=int, default=9)
    sp.add_argument("--max-components", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mode", choices=[m.value for m in Mode])
    sp.add_argument("--backend", choices=_kernels.available_backends())
    sp.add_argument("--jobs", type=int, default=1)
    sp = add("classify", "class key and base orders", cmd_classify)
    sp.add_argument("--against", metavar="FILE", help="partition the links in FILE (one per line)")
    add("parent", "parent-link diagram and crossing counts", cmd_simple)
    for name, help in (("recipe", "Dehn filling recipe"), ("bound", "volume upper bounds")):
        sp = add(name, help, cmd_simple)
        sp.add_argument("--lorenz", action="store_true", help="Lorenz link complement in S^3")
    sp = add("render", "SVG of the template or the parent diagram", cmd_render)
    sp.add_argument("--kind", choices=("template", "parent"), default="template")
    sp.add_argument("--out", metavar="FILE")
    sp.add_argument("--unit", type=float, default=40.0)
    sp.add_argument("--palette", choices=sorted(PALETTES), default="default")
    sp.add_argument("--hide-unused", action="store_true")
    sp = add("bench", "time bunch ordering against letter sorting", cmd_bench)
    sp.add_argument("--scales", default="1,10,100")
    sp.add_argument("--repeats", type=int, default=20)
    sp.add_argument("--backend", choices=_kernels.available_backends())
    sp.add_argument("--kernels", action="store_true", help="compare numba and numpy kernels instead")
    sp = add("batch", "apply one operation to every line of a file", cmd_batch, word=False)
    sp.add_argument("--input", required=True, metavar="FILE")
    sp.add_argument("--op", choices=sorted(OPS), default="orders")
    sp.add_argument("--jobs", type=int, default=1)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as err:
        print(f"bunchlinks: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except LinkError as err:
        print(err.name, file=sys.stderr)
        print(str(err), file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    try:
        code = run()
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
    sys.exit(code)
