"""``tokensign`` command-line interface.

Exit codes: 0 success, 1 computational failure (a verifier fails or a
module error is raised), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import core, equivalence, measures, token, verify
from .errors import (
    KOutOfRange,
    NTooSmall,
    ParseError,
    SizeMismatch,
    TokenSignError,
    UnknownFamily,
)
from .linalg import adjacency, char_poly, eigenvalues_symmetric, laplacian

TABLE_KINDS = ("cycles", "completes", "petersen", "tokens")
VERIFY_TARGETS = verify.CLAIMS + ("all",)

# graphs listed by ``table tokens``: (label, family, n)
TOKEN_TABLE_ROWS = (
    ("k5_three_negative", "k5_three_negative", None),
    ("k23_negative_chord", "k23_negative_chord", None),
    ("C5^-", "Cn_minus", 5),
    ("-K5", "all_neg_Kn", 5),
    ("bird", "bird", None),
    ("paw_balanced", "paw_balanced", None),
    ("paw, {2,3} negative", "paw_unbalanced", None),
)

# errors caused by bad input rather than by the computation
_USAGE_ERRORS = (UnknownFamily, NTooSmall, SizeMismatch, KOutOfRange, ParseError)


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


@dataclass(frozen=True)
class CommandConfig:
    command: str
    target: str | None = None
    file: Path | None = None
    family: str | None = None
    n: int | None = None
    mask: int | None = None
    k: int | None = None
    k1: int | None = None
    k2: int | None = None
    fmt: str = "text"
    seed: int = 0
    trials: int | None = None
    max_vertices: int | None = None
    tol: float | None = None
    n_max: int | None = None
    matrix: str = "adjacency"
    switch_set: str | None = None
    balanced_only: bool = False
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> CommandConfig:
        names = {f for f in cls.__dataclass_fields__ if f != "extra"}
        return cls(**{k: v for k, v in vars(ns).items() if k in names})


@dataclass
class Output:
    data: dict
    text: str
    rows: list[list] | None = None
    header: list[str] | None = None
    ok: bool = True


# ---------------------------------------------------------------- formatting

def frac_text(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} ≈ {float(x):.4g}"


def frac_json(x: Fraction) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator), "decimal": float(x)}


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return frac_json(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, core.SwitchingVector):
        return list(obj.values)
    if isinstance(obj, core.SignedGraph):
        return graph_json(obj)
    if isinstance(obj, bytes):
        return obj.decode()
    if hasattr(obj, "item"):  # numpy scalar
        return obj.item()
    return obj


def graph_json(g: core.SignedGraph) -> dict:
    return {"n": g.n, "edges": [[u, v, s] for u, v, s in g.edges]}


def _csv_cell(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(out.data), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if out.rows is not None:
            w.writerow(out.header)
            w.writerows([[_csv_cell(c) for c in row] for row in out.rows])
        else:
            w.writerow(["key", "value"])
            for k, v in out.data.items():
                w.writerow([k, _csv_cell(v) if not isinstance(v, (dict, list)) else json.dumps(_jsonable(v))])
        return buf.getvalue()
    return out.text if out.text.endswith("\n") else out.text + "\n"


# ---------------------------------------------------------------- input

def load_graph(cfg: CommandConfig) -> core.SignedGraph:
    if cfg.file is not None and cfg.family is not None:
        raise UsageError("--file", "cannot be combined with --family")
    if cfg.file is not None:
        try:
            text = Path(cfg.file).read_text()
        except OSError as e:
            raise UsageError("--file", str(e)) from e
        g = core.parse_graph(text)
    elif cfg.family is not None:
        try:
            g = core.family(cfg.family, cfg.n)
        except UnknownFamily as e:
            raise UsageError("--family", f"unknown family {cfg.family!r}") from e
        except (NTooSmall, SizeMismatch) as e:
            raise UsageError("--n", str(e)) from e
    else:
        raise UsageError("--file/--family", "an input graph is required")
    if cfg.mask is not None:
        try:
            g = core.apply_mask(g, cfg.mask)
        except SizeMismatch as e:
            raise UsageError("--mask", str(e)) from e
    return g


def _maybe_token(g: core.SignedGraph, cfg: CommandConfig) -> core.SignedGraph:
    if cfg.k is None or cfg.k == 1:
        return g
    cap = cfg.max_vertices or token.DEFAULT_SIZE_CAP
    return token.token_graph(g, cfg.k, size_cap=cap).graph


def _parse_set(spec: str, n: int) -> core.SwitchingVector:
    spec = spec.strip()
    if spec and set(spec) <= {"+", "-"}:
        if len(spec) != n:
            raise UsageError("--set", f"sign string needs {n} characters")
        return core.SwitchingVector(tuple(1 if c == "+" else -1 for c in spec))
    try:
        U = {int(x) for x in spec.split(",") if x.strip()}
    except ValueError as e:
        raise UsageError("--set", "expected a comma-separated vertex list or a +/- string") from e
    if any(not 1 <= v <= n for v in U):
        raise UsageError("--set", f"vertices must lie in 1..{n}")
    return core.SwitchingVector.from_set(n, U)


# ---------------------------------------------------------------- commands

def _graph_output(g: core.SignedGraph, comments=()) -> Output:
    return Output(graph_json(g), core.format_graph(g, comments),
                  rows=[[u, v, s] for u, v, s in g.edges], header=["u", "v", "sign"])


def cmd_info(cfg):
    g = _maybe_token(load_graph(cfg), cfg)
    cert = core.balance_check(g)
    data = {"n": g.n, "m": g.m, "m_pos": g.m_pos, "m_neg": g.m_neg, "balanced": cert.balanced}
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    return Output(data, text)


def cmd_balance(cfg):
    g = _maybe_token(load_graph(cfg), cfg)
    cert = core.balance_check(g)
    if cert.balanced:
        data = {"balanced": True, "U": sorted(cert.switching.U), "switching": cert.switching}
        text = f"balanced\nU = {{{','.join(map(str, sorted(cert.switching.U)))}}}"
    else:
        data = {"balanced": False, "negative_cycle": list(cert.cycle)}
        text = f"unbalanced\nnegative cycle: {' '.join(map(str, cert.cycle))}"
    return Output(data, text)


def cmd_switch(cfg):
    g = load_graph(cfg)
    if cfg.switch_set is None:
        raise UsageError("--set", "required for switch")
    return _graph_output(core.switch(g, _parse_set(cfg.switch_set, g.n)))


def cmd_negate(cfg):
    return _graph_output(core.negate(load_graph(cfg)))


def cmd_complement(cfg):
    return _graph_output(core.signed_complement(load_graph(cfg)))


def cmd_token(cfg):
    if cfg.k is None:
        raise UsageError("--k", "required for token")
    g = load_graph(cfg)
    T = token.token_graph(g, cfg.k, size_cap=cfg.max_vertices or token.DEFAULT_SIZE_CAP)
    out = _graph_output(T.graph, T.comments())
    out.data["subsets"] = [list(A) for A in T.subsets]
    return out


def cmd_spectrum(cfg):
    g = _maybe_token(load_graph(cfg), cfg)
    M = laplacian(g) if cfg.matrix == "laplacian" else adjacency(g)
    p = char_poly(M)
    spec = eigenvalues_symmetric(M)
    tol = cfg.tol if cfg.tol is not None else spec.tolerance
    ev = list(spec.eigenvalues)
    data = {"matrix": cfg.matrix, "char_poly": p.to_json(), "eigenvalues": ev,
            "origin_symmetric": spec.is_origin_symmetric(tol)}
    text = f"char poly: {p}\neigenvalues: {' '.join(f'{x:.6g}' for x in ev)}"
    return Output(data, text, rows=[[i, x] for i, x in enumerate(ev, 1)], header=["i", "eigenvalue"])


def cmd_frustration(cfg):
    g = _maybe_token(load_graph(cfg), cfg)
    res = measures.frustration_index(g, max_n=cfg.max_vertices or measures.FRUSTRATION_MAX_N)
    data = {"frustration": res.index, "U": sorted(res.witness.U),
            "removed_edges": [list(e) for e in res.removed_edges]}
    text = (f"frustration index: {res.index}\n"
            f"U = {{{','.join(map(str, sorted(res.witness.U)))}}}\n"
            f"negative after switching: {' '.join(f'{u}-{v}' for u, v in res.removed_edges) or '-'}")
    return Output(data, text)


def cmd_unbalance(cfg):
    g = _maybe_token(load_graph(cfg), cfg)
    res = measures.unbalance_level(g)
    data = {"ell_n_minus_1": res.ell_n_minus_1, "ell_n": res.ell_n, "ell": res.ell,
            "signed_traces": [str(t) for t in res.signed_traces],
            "unsigned_traces": [str(t) for t in res.unsigned_traces]}
    text = (f"{frac_text(res.ell)}\n"
            f"ell_(n-1) = {frac_text(res.ell_n_minus_1)}\nell_n = {frac_text(res.ell_n)}")
    return Output(data, text, rows=[[res.ell_n_minus_1, res.ell_n, res.ell]],
                  header=["ell_n_minus_1", "ell_n", "ell"])


def cmd_bounds(cfg):
    g = load_graph(cfg)
    k = cfg.k or 2
    rep = measures.check_frustration_bounds(
        g, k, max_token_vertices=cfg.max_vertices or measures.BOUNDS_MAX_TOKEN_VERTICES)
    data = {"k": k, "frustration": rep.frustration, "token_frustration": rep.token_frustration,
            "upper": rep.upper, "holds": rep.holds}
    text = (f"{rep.frustration} <= {rep.token_frustration} <= {rep.upper}: "
            f"{'holds' if rep.holds else 'VIOLATED'}")
    return Output(data, text, ok=rep.holds)


def _class_rows(reports):
    return [[i, r.label, r.class_size, r.frustration, r.unbalance] for i, r in enumerate(reports, 1)]


def _class_output(reports):
    rows = _class_rows(reports)
    header = ["class", "label", "switching_classes", "frustration", "unbalance"]
    lines = [f"{i:>2}  {lab:<22} size {sz:>4}  l = {fr}  ell = {frac_text(ub)}" for i, lab, sz, fr, ub in rows]
    lines.append(f"total switching classes: {sum(r.class_size for r in reports)}")
    data = {"classes": [{"label": r.label, "size": r.class_size, "frustration": r.frustration,
                         "unbalance": r.unbalance, "canonical": r.canonical,
                         "representative": r.representative} for r in reports]}
    return Output(data, "\n".join(lines), rows=rows, header=header)


def cmd_classes(cfg):
    return _class_output(equivalence.enumerate_switching_iso_classes(load_graph(cfg)))


def cmd_signsym(cfg):
    g = _maybe_token(load_graph(cfg), cfg)
    ok, cert = equivalence.is_sign_symmetric(g, max_n=cfg.max_vertices or equivalence.CANONICAL_MAX_N)
    data = {"sign_symmetric": ok}
    text = "sign-symmetric" if ok else "not sign-symmetric"
    if cert is not None:
        data["perm"] = {str(k): v for k, v in sorted(cert.perm.items())}
        data["U"] = sorted(cert.switching.U)
        text += "\nperm: " + " ".join(f"{k}->{v}" for k, v in sorted(cert.perm.items()))
        text += f"\nU = {{{','.join(map(str, sorted(cert.switching.U)))}}}"
    return Output(data, text)


def _table_cycles(n_max):
    rows = [[n, measures.ell(core.family("Cn_minus", n)), measures.ell(core.family("all_neg_Cn", n))]
            for n in range(3, n_max + 1)]
    return ["n", "ell(Cn^-)", "ell(-Cn)"], rows


def _table_completes(n_max):
    rows = [[n] + [measures.ell(core.family(f, n)) for f in ("Kn_minus", "neg_Kn_plus", "all_neg_Kn")]
            for n in range(2, n_max + 1)]
    return ["n", "ell(Kn^-)", "ell(-Kn^+)", "ell(-Kn)"], rows


def _table_tokens(_):
    rows = []
    for label, fam, n in TOKEN_TABLE_ROWS:
        g = core.family(fam, n)
        rows.append([label, measures.ell(g), measures.ell(token.token_graph(g, 2).graph)])
    return ["graph", "ell", "ell(F_2)"], rows


def cmd_table(cfg):
    if cfg.target == "petersen":
        return _class_output(equivalence.enumerate_switching_iso_classes(core.family("petersen")))
    build = {"cycles": _table_cycles, "completes": _table_completes, "tokens": _table_tokens}[cfg.target]
    header, rows = build(cfg.n_max or 15)
    widths = [max(len(str(h)), *(len(frac_text(r[i]) if isinstance(r[i], Fraction) else str(r[i])) for r in rows))
              for i, h in enumerate(header)]

    def line(cells):
        return "  ".join((frac_text(c) if isinstance(c, Fraction) else str(c)).ljust(w)
                         for c, w in zip(cells, widths)).rstrip()

    text = "\n".join([line(header)] + [line(r) for r in rows])
    data = {"columns": header, "rows": rows}
    return Output(data, text, rows=rows, header=header)


def cmd_verify(cfg):
    claims = verify.CLAIMS if cfg.target == "all" else (cfg.target,)
    trials = cfg.trials if cfg.trials is not None else 100
    tol = cfg.tol if cfg.tol is not None else verify.EIG_TOL
    reports, summary = verify.sweep(trials, cfg.seed, claims, n_max=cfg.n_max or 7, tol=tol)
    failed = [r for r in reports if not r.passed]
    data = {"seed": cfg.seed, "trials": trials, "summary": summary,
            "failures": [r.to_json() for r in failed]}
    lines = [f"{c:<17} {s['passed']}/{s['trials']} passed" for c, s in summary.items()]
    lines.append(f"failures: {len(failed)}")
    rows = [[c, s["trials"], s["passed"], s["failed"]] for c, s in summary.items()]
    return Output(data, "\n".join(lines), rows=rows, header=["claim", "trials", "passed", "failed"],
                  ok=not failed)


def cmd_explore(cfg):
    trials = cfg.trials if cfg.trials is not None else 1000
    k = cfg.k or 2
    rep = measures.explore_monotonicity(trials, cfg.n_max or 6, k, seed=cfg.seed,
                                       balanced_only=cfg.balanced_only)

    def cert(t):
        return {"trial": t.trial, "graph": t.graph, "other": t.other, "ell": t.ell, "ell_token": t.ell_token,
                "frustration": [t.frustration, t.frustration_other],
                "token_frustration": [t.token_frustration, t.token_frustration_other],
                "ell_token_other": t.ell_token_other}

    data = {"trials": rep.evaluated, "seed": rep.seed, "k": rep.k, "max_ell": rep.max_ell,
            "counterexamples": {str(i): [cert(t) for t in v] for i, v in rep.counterexamples.items()}}
    lines = [f"trials: {rep.evaluated}"]
    lines += [f"statement {i}: {c} counterexample(s)" for i, c in rep.counts.items()]
    rows = [[i, c] for i, c in rep.counts.items()]
    return Output(data, "\n".join(lines), rows=rows, header=["statement", "counterexamples"])


COMMANDS = {
    "info": cmd_info, "balance": cmd_balance, "switch": cmd_switch, "negate": cmd_negate,
    "complement": cmd_complement, "token": cmd_token, "spectrum": cmd_spectrum,
    "frustration": cmd_frustration, "unbalance": cmd_unbalance, "bounds": cmd_bounds,
    "classes": cmd_classes, "signsym": cmd_signsym, "table": cmd_table, "verify": cmd_verify,
    "explore-p45": cmd_explore,
}

_GRAPH_COMMANDS = ("info", "balance", "switch", "negate", "complement", "token", "spectrum",
                   "frustration", "unbalance", "bounds", "classes", "signsym")


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("usage", message)


def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int)
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--n-max", type=int)


def _graph_args(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--file", type=Path)
    src.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--mask", type=lambda s: int(s, 0),
                   help="bit i makes sorted edge i negative; accepts 0b/0x prefixes")
    p.add_argument("--k", type=int)
    p.add_argument("--k1", type=int)
    p.add_argument("--k2", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tokensign", description="Token signed graphs: balance, spectra, unbalance.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in _GRAPH_COMMANDS:
        p = sub.add_parser(name)
        _graph_args(p)
        _common(p)
        if name == "switch":
            p.add_argument("--set", dest="switch_set",
                           help="switching set U as '1,3' or a +/- string per vertex")
        if name == "spectrum":
            p.add_argument("--matrix", choices=("adjacency", "laplacian"), default="adjacency")
    p = sub.add_parser("table")
    p.add_argument("target", choices=TABLE_KINDS)
    _common(p)
    p = sub.add_parser("verify")
    p.add_argument("target", choices=VERIFY_TARGETS)
    _common(p)
    p = sub.add_parser("explore-p45")
    p.add_argument("--k", type=int)
    p.add_argument("--balanced-only", action="store_true")
    _common(p)
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg = CommandConfig.from_namespace(build_parser().parse_args(argv))
        out = COMMANDS[cfg.command](cfg)
    except UsageError as e:
        print(f"usage error: {e}", file=stderr)
        return 2
    except _USAGE_ERRORS as e:
        print(f"usage error: {type(e).__name__}: {e}", file=stderr)
        return 2
    except TokenSignError as e:
        print(f"error: {type(e).__name__}: {e}", file=stderr)
        return 1
    stdout.write(render(out, cfg.fmt))
    return 0 if out.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
