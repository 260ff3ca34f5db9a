"""Command line front end: ``nilcox <command> ...``.

Exit codes: 0 success, 1 mismatch or failed verification, 2 usage error,
3 requested size beyond ``MAX_SAFE_LENGTH``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import pieri_ops, symfunc
from .affine_perm import MAX_SAFE_LENGTH, AffinePerm, elements_up_to, from_word, grassmannian_to_partition, parse_element
from .combinat import Partition, check_k_bounded
from .fomin_stanley import h, kschur_expansion, noncomm_kschur
from .nilcoxeter import NilCoxElem, basis, parse_elem, render, render_word
from .strip_graphs import (
    ascent_composition,
    strong_edges_from,
    strong_graph,
    to_dot,
    to_json_edges,
    truncated_vertices,
    weak_graph,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3
FORMATS = ("text", "json", "latex", "dot")


class BoundExceeded(Exception):
    pass


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    k: int = 2
    max_length: int = 4
    fmt: str = "text"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 1:
            raise UsageError(f"k must be at least 1, got {self.k}")
        if self.max_length < 0:
            raise UsageError("length bound must be nonnegative")
        if self.max_length > MAX_SAFE_LENGTH:
            raise BoundExceeded(f"length {self.max_length} exceeds the supported bound {MAX_SAFE_LENGTH}")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")


def _partition_arg(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}") from None
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise UsageError(f"not a partition: {text!r}")
    return parts


def _element_arg(k: int, text: str) -> AffinePerm:
    try:
        w = parse_element(k, text)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    if w.length > MAX_SAFE_LENGTH:
        raise BoundExceeded(f"element length {w.length} exceeds the supported bound {MAX_SAFE_LENGTH}")
    return w


def _emit_elem(a: NilCoxElem, fmt: str, label: str = "") -> str:
    if fmt == "json":
        return json.dumps(a.to_json(), indent=1)
    body = render(a, latex=fmt == "latex")
    return f"{label} = {body}" if label else body


def _emit_sym(f: symfunc.SymFunc, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(f.to_json(), indent=1)
    return f.pretty(latex=fmt == "latex")


# --- commands ------------------------------------------------------------------------


def cmd_elements(cfg: RunConfig) -> tuple[int, str]:
    elems = elements_up_to(cfg.k, cfg.max_length)
    if cfg.params.get("grassmannian"):
        elems = [w for w in elems if w.is_grassmannian]
    if cfg.fmt == "json":
        rows = []
        for w in elems:
            row = {"window": list(w.window), "word": list(w.word()), "length": w.length}
            if w.is_grassmannian:
                row["partition"] = list(grassmannian_to_partition(w))
            rows.append(row)
        return EXIT_OK, json.dumps(rows, indent=1)
    lines = []
    for w in elems:
        extra = f"  partition={list(grassmannian_to_partition(w))}" if w.is_grassmannian else ""
        lines.append(f"{w.length}  {render_word(w)}  window={list(w.window)}{extra}")
    return EXIT_OK, "\n".join(lines)


def cmd_graph(cfg: RunConfig) -> tuple[int, str]:
    which = cfg.params["which"]
    verts = truncated_vertices(cfg.k, cfg.max_length)
    if cfg.fmt == "json":
        return EXIT_OK, to_json_edges(verts, which)
    if cfg.fmt == "dot":
        return EXIT_OK, to_dot(verts, which).rstrip("\n")
    if which == "strong":
        lines = [f"{render_word(e.source)} -> {render_word(e.target)}  [{e.label}]" for e in strong_graph(verts)]
    else:
        lines = [f"{render_word(s)} -> {render_word(d)}  [{i}]" for s, d, i in weak_graph(verts)]
    return EXIT_OK, "\n".join(lines)


def cmd_kschur(cfg: RunConfig) -> tuple[int, str]:
    lam = cfg.params["lambda"]
    try:
        check_k_bounded(lam, cfg.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if sum(lam) > MAX_SAFE_LENGTH:
        raise BoundExceeded(f"degree {sum(lam)} exceeds the supported bound {MAX_SAFE_LENGTH}")
    s = noncomm_kschur(cfg.k, lam)
    if cfg.params.get("basis") == "h":
        exp = kschur_expansion(s).to_basis("h")
        f = symfunc.SymFunc("h", sum(lam), exp.coeffs)
        return EXIT_OK, _emit_sym(f, cfg.fmt)
    label = f"s^({cfg.k})_{{({','.join(map(str, lam))})}}"
    return EXIT_OK, _emit_elem(s, cfg.fmt, "" if cfg.fmt == "latex" else label)


def cmd_apply(cfg: RunConfig) -> tuple[int, str]:
    try:
        op = pieri_ops.parse_op(cfg.params["op"])
        a = parse_elem(cfg.k, cfg.params["elem"])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if any(w.length > MAX_SAFE_LENGTH for w in a.support()):
        raise BoundExceeded(f"element exceeds the supported length bound {MAX_SAFE_LENGTH}")
    return EXIT_OK, _emit_elem(op.apply(a), cfg.fmt)


def cmd_strong(cfg: RunConfig) -> tuple[int, str]:
    u = _element_arg(cfg.k, cfg.params["u"])
    v = _element_arg(cfg.k, cfg.params["v"])
    f = symfunc.strong_schur(u, v, cfg.params["basis"])
    return EXIT_OK, _emit_sym(f, cfg.fmt)


def all_sweeps() -> dict:
    out = dict(pieri_ops.ALL_SWEEPS)
    out.update(symfunc.SYMFUNC_SWEEPS)
    return out


def run_sweep(name: str, k: int, L: int) -> dict:
    start = time.perf_counter()
    data = all_sweeps()[name](k, L).to_json()
    data["name"] = name
    data["seconds"] = round(time.perf_counter() - start, 3)
    return data


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    registry = all_sweeps()
    names = list(registry) if cfg.params.get("all") else cfg.params.get("identity") or []
    if not names:
        raise UsageError("choose --all or at least one --identity")
    unknown = [n for n in names if n not in registry]
    if unknown:
        raise UsageError(f"unknown identities {unknown}; available: {sorted(registry)}")
    jobs = cfg.params.get("jobs") or 1
    if jobs > 1 and len(names) > 1:
        # sweeps are pure; results come back in submission order
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_sweep, names, [cfg.k] * len(names), [cfg.max_length] * len(names)))
    else:
        reports = [run_sweep(name, cfg.k, cfg.max_length) for name in names]
    ok = all(r["passed"] for r in reports)
    if cfg.fmt == "json":
        if not cfg.params.get("timings"):
            for r in reports:
                r.pop("seconds")
        text = json.dumps({"k": cfg.k, "L": cfg.max_length, "passed": ok, "reports": reports}, indent=1)
    else:
        text = "\n".join(
            f"{'PASS' if r['passed'] else 'FAIL'}  {r['name']}: {r['identity']} checked={r['checked']}"
            + ("" if r["passed"] else f" failures={r['failure_count']}: {r['failures'][:3]}")
            for r in reports
        )
    return (EXIT_OK if ok else EXIT_MISMATCH), text


# --- golden reproduction ---------------------------------------------------------------


def load_golden(path: str | None = None) -> dict:
    if path:
        return json.loads(Path(path).read_text())
    return json.loads(resources.files("nilcox").joinpath("golden/worked_examples.json").read_text())


def _elem_from_terms(k: int, terms: list[dict]) -> NilCoxElem:
    acc: dict[AffinePerm, int] = {}
    for t in terms:
        w = from_word(k, t["word"])
        acc[w] = acc.get(w, 0) + t["coeff"]
    return NilCoxElem(k, acc)


def reproduce(golden: dict) -> list[tuple[str, bool, str]]:
    """Recompute every golden example; returns (name, ok, detail) triples."""
    results = []
    for ex in golden["operator_examples"]:
        k = ex["k"]
        got = pieri_ops.parse_op(ex["op"]).apply(basis(from_word(k, ex["elem"])))
        want = _elem_from_terms(k, ex["expected"])
        results.append((ex["name"], got == want, f"got {render(got)}, expected {render(want)}"))

    asc = golden["ascent_composition"]
    got_asc = list(ascent_composition(asc["labels"]))
    results.append((f"ascent composition of {asc['labels']}", got_asc == asc["expected"], f"got {got_asc}"))

    mk = golden["marking_example"]
    x, y = from_word(mk["k"], mk["x"]), from_word(mk["k"], mk["y"])
    edges = [e for e in strong_edges_from(x) if e.target == y]
    got_labels = sorted(e.label for e in edges)
    got_pairs = sorted([e.i, e.j] for e in edges)
    ok = got_labels == sorted(mk["labels"]) and got_pairs == sorted(mk["pairs"])
    results.append(("marking example", ok, f"labels {got_labels}, pairs {got_pairs}"))

    for k in golden["D_on_h"]["ks"]:
        bad = [(i, r) for r in range(1, k + 1) for i in range(1, r + 1) if pieri_ops.D(i, h(k, r)) != h(k, r - i)]
        results.append((f"D_i(h_r) = h_(r-i), k={k}", not bad, f"failures at (i, r) = {bad}"))

    for key, which in (("strong_graph_k2", "strong"), ("weak_graph_k2", "weak")):
        g = golden[key]
        k = g["k"]
        verts = truncated_vertices(k, g["top_length"])
        want = sorted(_edge_key(k, e) for e in g["edges"])
        if which == "strong":
            got = sorted((e.source.window, e.target.window, e.label) for e in strong_graph(verts))
        else:
            got = sorted((s.window, d.window, None) for s, d, _ in weak_graph(verts))
        results.append((f"{which} graph edge multiset (k={k})", got == want, f"{len(got)} edges, expected {len(want)}"))
    return results


def _edge_key(k: int, e: dict):
    return (from_word(k, e["src"]).window, from_word(k, e["dst"]).window, e.get("label"))


def cmd_reproduce(cfg: RunConfig) -> tuple[int, str]:
    try:
        golden = load_golden(cfg.params.get("golden"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read golden file: {exc}") from None
    results = reproduce(golden)
    ok = all(r[1] for r in results)
    if cfg.fmt == "json":
        text = json.dumps({"passed": ok, "results": [{"name": n, "passed": p, "detail": d} for n, p, d in results]},
                          indent=1)
    else:
        text = "\n".join(f"{'PASS' if p else 'FAIL'}  {n}" + ("" if p else f": {d}") for n, p, d in results)
    return (EXIT_OK if ok else EXIT_MISMATCH), text


COMMANDS = {
    "elements": cmd_elements,
    "graph": cmd_graph,
    "kschur": cmd_kschur,
    "apply": cmd_apply,
    "strong": cmd_strong,
    "verify": cmd_verify,
    "reproduce": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nilcox", description="Affine nilCoxeter algebra, Pieri operators and k-Schur functions.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_fmt="text", length=True, formats=("text", "json", "latex")):
        sp.add_argument("-k", type=int, default=2, help="rank: the group has generators s_0..s_k")
        if length:
            sp.add_argument("-L", "--max-length", type=int, default=4, help="length bound")
        sp.add_argument("--format", choices=formats, default=default_fmt)

    sp = sub.add_parser("elements", help="list group elements up to a length")
    common(sp, formats=("text", "json"))
    sp.add_argument("--grassmannian", action="store_true", help="only 0-Grassmannian elements")

    sp = sub.add_parser("graph", help="weak or marked strong order graph below Grassmannian elements of length L")
    common(sp, default_fmt="dot", formats=("dot", "json", "text"))
    sp.add_argument("--which", choices=("weak", "strong"), default="strong")

    sp = sub.add_parser("kschur", help="noncommutative k-Schur function")
    common(sp, length=False)
    sp.add_argument("--lambda", dest="lam", required=True, help="k-bounded partition, e.g. 2,1")
    sp.add_argument("--basis", choices=("u", "h"), default="u", help="expand in the u_w basis or in h_lambda")

    sp = sub.add_parser("apply", help="apply an operator expression to an element")
    common(sp, length=False)
    sp.add_argument("--op", required=True, help='e.g. "D[2,1]", "U2", "D^[2,1]", "D1*U2"')
    sp.add_argument("--elem", required=True, help='e.g. "1,2,1,0", "w:[0,2,4]", "2*0,1 + 1,0"')

    sp = sub.add_parser("strong", help="strong Schur function Strong_{u/v}")
    common(sp, length=False)
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", default="e")
    sp.add_argument("--basis", choices=("F", "M", "m", "h", "kschur"), default="m")

    sp = sub.add_parser("verify", help="run identity sweeps and print a report")
    common(sp, default_fmt="json", formats=("json", "text"))
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--identity", action="append", help="sweep name (repeatable)")
    sp.add_argument("--timings", action="store_true", help="include wall-clock seconds in JSON output")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for independent sweeps")

    sp = sub.add_parser("reproduce", help="recompute the stored examples and diff against them")
    sp.add_argument("--golden", help="alternative golden JSON file")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    params = {}
    try:
        if args.command == "elements":
            params["grassmannian"] = args.grassmannian
        elif args.command == "graph":
            params["which"] = args.which
        elif args.command == "kschur":
            params["lambda"] = _partition_arg(args.lam)
            params["basis"] = args.basis
        elif args.command == "apply":
            params.update(op=args.op, elem=args.elem)
        elif args.command == "strong":
            params.update(u=args.u, v=args.v, basis=args.basis)
        elif args.command == "verify":
            if args.jobs < 1:
                raise UsageError("--jobs must be positive")
            params.update(all=args.all, identity=args.identity, timings=args.timings, jobs=args.jobs)
        elif args.command == "reproduce":
            params["golden"] = args.golden
        cfg = RunConfig(
            command=args.command,
            k=getattr(args, "k", 2),
            max_length=getattr(args, "max_length", 4),
            fmt=args.format,
            params=params,
        )
        code, text = COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"nilcox: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceeded as exc:
        print(f"nilcox: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
