"""Command-line front end: every computation behind one `fcc` subcommand.

Exit codes: 0 = success, 1 = negative result (proved absent / verification
failed / decoding failed), 2 = input error, 3 = solver budget exceeded.  All
file outputs carry provenance comments (tool version, command line, budgets);
JSON outputs carry the same data under a "meta" member.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from pathlib import Path
from time import monotonic

from . import __version__
from .bounds import bound_report, compare_report
from .cosets import build_cosetwise_encoder
from .distance import build_drm, build_fdm, matrix_from_lists, n_q_exact
from .errors import BudgetExceededError, CodeNotFoundError, DecodingFailureError
from .formats import (
    label_text,
    parse_inline_rows,
    read_aq_table,
    read_encoder_file,
    read_function_file,
    read_parity_file,
    render_compare_csv,
    render_encoder_file,
    render_matrix_csv,
    render_spectrum_csv,
)
from .functions import coset_decomposition, linear_function
from .graph import (
    FccEncoder,
    build_graph,
    decode as graph_decode,
    extract_fcc,
    find_fcc_violation,
    independence_number,
)
from .mis import DEFAULT_NODE_BUDGET
from .spectrum import spectrum_of

EX_OK = 0
EX_NEGATIVE = 1
EX_INPUT = 2
EX_BUDGET = 3


def _load_function(args):
    """Resolve the function source: exactly one of --func / --matrix."""
    if bool(args.func) == bool(args.matrix):
        raise ValueError("provide exactly one function source (--func or --matrix)")
    if args.func:
        f = read_function_file(args.func)
        if args.q is not None and args.q != f.q:
            raise ValueError(f"--q {args.q} contradicts the file's q={f.q}")
        return f
    rows = parse_inline_rows(args.matrix)
    if not rows:
        raise ValueError("--matrix needs at least one row (use a file for l=0)")
    return linear_function(args.q if args.q is not None else 2, rows)


def _required_t(args) -> int:
    if args.t is None:
        raise ValueError("--t is required for this command")
    return args.t


def _budgets(args) -> tuple[int, float | None]:
    nodes = args.budget_nodes if args.budget_nodes is not None else DEFAULT_NODE_BUDGET
    if nodes <= 0:
        raise ValueError("--budget-nodes must be positive")
    deadline = None
    if args.budget_seconds is not None:
        if args.budget_seconds <= 0:
            raise ValueError("--budget-seconds must be positive")
        deadline = monotonic() + args.budget_seconds
    return nodes, deadline


def _provenance(args, argv) -> list[str]:
    nodes = args.budget_nodes if args.budget_nodes is not None else DEFAULT_NODE_BUDGET
    seconds = args.budget_seconds if args.budget_seconds is not None else "none"
    return [
        f"tool fcc {__version__}",
        "command fcc " + shlex.join(argv),
        f"budget-nodes {nodes} budget-seconds {seconds}",
    ]


def _meta(args, argv) -> dict:
    return {
        "tool": f"fcc {__version__}",
        "command": "fcc " + shlex.join(argv),
        "budget_nodes": (
            args.budget_nodes if args.budget_nodes is not None else DEFAULT_NODE_BUDGET
        ),
        "budget_seconds": args.budget_seconds,
    }


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, out: str | None) -> None:
    _emit(json.dumps(payload, indent=2) + "\n", out)


# -- command handlers --------------------------------------------------------

def _matrix_command(build):
    def handler(args, argv) -> int:
        f = _load_function(args)
        matrix = build(f, _required_t(args))
        labels = [label_text(x) for x in matrix.labels]
        if (args.format or "csv") == "csv":
            header = _provenance(args, argv) + ["labels " + " ".join(labels)]
            _emit(render_matrix_csv(matrix, header), args.out)
        else:
            _emit_json(
                {
                    "meta": _meta(args, argv),
                    "labels": labels,
                    "rows": matrix.to_lists(),
                },
                args.out,
            )
        return EX_OK

    return handler


def cmd_bounds(args, argv) -> int:
    f = _load_function(args)
    t = _required_t(args)
    node_budget, deadline = _budgets(args)
    r_max = 8 if args.r_max is None else args.r_max
    report = bound_report(
        f, t, r_max=r_max, node_budget=node_budget, deadline=deadline
    )
    entries = [
        {
            "name": e.name,
            "sense": e.sense,
            "value": e.integer,
            "exact": None if e.rational is None else str(e.rational),
            "note": e.note,
        }
        for e in report.entries
    ]
    if (args.format or "json") == "json":
        _emit_json(
            {
                "meta": _meta(args, argv),
                "descriptor": report.descriptor,
                "optimal": report.optimal,
                "entries": entries,
            },
            args.out,
        )
    else:
        lines = [",".join(("name", "sense", "value", "exact", "note"))]
        for e in entries:
            cells = [e["name"], e["sense"], e["value"], e["exact"], e["note"]]
            lines.append(
                ",".join("" if c is None else str(c).replace(",", ";") for c in cells)
            )
        header = "".join(f"# {h}\n" for h in _provenance(args, argv))
        _emit(header + "\n".join(lines) + "\n", args.out)
    # A partial report is still printed, but budget-blocked entries flag the run.
    if any(e["note"].startswith("budget: ") for e in entries):
        return EX_BUDGET
    return EX_OK


def cmd_alpha(args, argv) -> int:
    f = _load_function(args)
    t = _required_t(args)
    if args.r is None:
        raise ValueError("--r is required: alpha works on the graph at one redundancy")
    node_budget, deadline = _budgets(args)
    G = build_graph(f, t, args.r)
    res = independence_number(G, node_budget=node_budget, deadline=deadline)
    _emit_json(
        {
            "meta": _meta(args, argv),
            "vertices": G.n_vertices,
            "edges": G.edge_count(),
            "alpha": res.size,
            "witness": sorted(res.members),
            "nodes": res.nodes,
        },
        args.out,
    )
    return EX_OK


def cmd_nq(args, argv) -> int:
    if bool(args.func) == bool(args.matrix):
        raise ValueError(
            "provide exactly one source: --func (with a target matrix) or "
            "--matrix with the requirement rows"
        )
    _, deadline = _budgets(args)
    if args.matrix:
        D = matrix_from_lists(parse_inline_rows(args.matrix))
        q = args.q if args.q is not None else 2
    else:
        f = read_function_file(args.func)
        if args.q is not None and args.q != f.q:
            raise ValueError(f"--q {args.q} contradicts the file's q={f.q}")
        t = _required_t(args)
        D = build_drm(f, t) if args.target == "drm" else build_fdm(f, t)
        q = f.q
    res = n_q_exact(D, q, r_cap=args.r_max, deadline=deadline)
    if res.found:
        assert res.witness is not None
        _emit_json(
            {
                "meta": _meta(args, argv),
                "found": True,
                "n": res.n,
                "witness": [label_text(w) for w in res.witness.words],
            },
            args.out,
        )
        return EX_OK
    _emit_json(
        {
            "meta": _meta(args, argv),
            "found": False,
            "n": None,
            "r_cap": res.r_cap,
            "reason": f"no code meets the matrix at any length up to {res.r_cap}",
        },
        args.out,
    )
    return EX_NEGATIVE


def cmd_spectrum(args, argv) -> int:
    f = _load_function(args)
    t = _required_t(args)
    if args.r is None:
        raise ValueError("--r is required: the spectrum is per-redundancy")
    spec = spectrum_of(f, t, args.r)
    if (args.format or "csv") == "csv":
        _emit(render_spectrum_csv(spec, _provenance(args, argv)), args.out)
    else:
        _emit_json(
            {"meta": _meta(args, argv), "eigenvalues": list(spec.eigenvalues)},
            args.out,
        )
    return EX_OK


def cmd_construct(args, argv) -> int:
    f = _load_function(args)
    t = _required_t(args)
    node_budget, deadline = _budgets(args)
    if args.r is not None and args.parity:
        raise ValueError("pass --r (graph search) or --parity (coset-wise), not both")
    if args.parity:
        parity = read_parity_file(args.parity, f.q)
        E = build_cosetwise_encoder(f, t, parity)
        method = "coset-wise from the given parity file"
    elif args.r is not None:
        G = build_graph(f, t, args.r)
        E = extract_fcc(G, f, t, node_budget=node_budget, deadline=deadline)
        method = f"independent-set search at r={args.r}"
    else:
        res = n_q_exact(build_fdm(f, t), f.q, r_cap=args.r_max, deadline=deadline)
        if not res.found:
            raise CodeNotFoundError(
                f"no parity code meets the function-distance matrix at any "
                f"length up to {res.r_cap}; pass --r for a graph search"
            )
        assert res.witness is not None
        cls = coset_decomposition(f).class_of
        words = res.witness.words
        E = FccEncoder(
            f=f,
            t=t,
            r=res.n,
            parity=tuple(words[cls[rank]] for rank in range(f.q**f.k)),
        )
        method = "minimum-length parity search on the function-distance matrix"
    violation = find_fcc_violation(E)
    assert violation is None, f"constructed encoder fails verification: {violation}"
    text = render_encoder_file(
        E, header_lines=_provenance(args, argv) + [f"method {method}"]
    )
    _emit(text, args.out)
    if args.out:
        _emit_json(
            {
                "meta": _meta(args, argv),
                "r": E.r,
                "t": t,
                "verified": True,
                "method": method,
                "encoder": args.out,
            },
            None,
        )
    return EX_OK


def cmd_verify(args, argv) -> int:
    f = _load_function(args)
    E = read_encoder_file(args.encoder, f)
    violation = find_fcc_violation(E)
    if violation is None:
        _emit_json(
            {"meta": _meta(args, argv), "ok": True, "r": E.r, "t": E.t}, args.out
        )
        return EX_OK
    u1, u2, d = violation
    _emit_json(
        {
            "meta": _meta(args, argv),
            "ok": False,
            "violation": {
                "u1": label_text(u1),
                "u2": label_text(u2),
                "distance": d,
                "required": 2 * E.t + 1,
            },
        },
        args.out,
    )
    return EX_NEGATIVE


def cmd_decode(args, argv) -> int:
    f = _load_function(args)
    E = read_encoder_file(args.encoder, f)
    word = args.word.strip()
    if not word.isdigit():
        raise ValueError(f"received word must be a digit string, got {word!r}")
    label = graph_decode(E, tuple(int(ch) for ch in word))
    _emit_json({"meta": _meta(args, argv), "label": label_text(label)}, args.out)
    return EX_OK


def cmd_compare(args, argv) -> int:
    if args.d is None:
        raise ValueError("--d is required")
    if args.k_range is None:
        raise ValueError("--k-range is required (form A:B, inclusive)")
    parts = args.k_range.split(":")
    if len(parts) != 2:
        raise ValueError(f"--k-range must have the form A:B, got {args.k_range!r}")
    k_range = range(int(parts[0]), int(parts[1]) + 1)
    q = args.q if args.q is not None else 2
    table = read_aq_table(args.aq_table) if args.aq_table else None
    rows = compare_report(q, args.d, k_range, table)
    if (args.format or "csv") == "csv":
        _emit(
            render_compare_csv(
                rows,
                header_lines=_provenance(args, argv),
                include_table_columns=table is not None,
            ),
            args.out,
        )
    else:
        _emit_json(
            {
                "meta": _meta(args, argv),
                "rows": [
                    {
                        "k": row.k,
                        "r_prime": row.r_prime,
                        "aq_kind": row.aq_kind,
                        "r_bgs": row.r_bgs,
                        "delta_bgs": row.delta_bgs,
                        "delta_blb": row.delta_blb,
                        "delta_bub": row.delta_bub,
                    }
                    for row in rows
                ],
            },
            args.out,
        )
    return EX_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fcc",
        description="Function-correcting codes: distance requirements, "
        "conflict graphs, redundancy bounds, and coset-wise constructions.",
    )
    parser.add_argument(
        "--version", action="version", version=f"fcc {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, handler, help_text: str, func_source: bool = True):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--out", metavar="PATH", help="write output here, not stdout")
        p.add_argument("--format", choices=("csv", "json"))
        p.add_argument("--budget-nodes", type=int, metavar="N")
        p.add_argument("--budget-seconds", type=float, metavar="S")
        if func_source:
            p.add_argument("--func", metavar="PATH", help="function file")
            p.add_argument(
                "--matrix", metavar="ROWS", help="inline matrix rows 'r1;r2;...'"
            )
            p.add_argument(
                "--q", type=int, help="field size for --matrix (default 2)"
            )
        return p

    p = add("drm", _matrix_command(build_drm), "message-pairwise distance requirements")
    p.add_argument("--t", type=int)

    p = add("fdm", _matrix_command(build_fdm), "function-distance requirements")
    p.add_argument("--t", type=int)

    p = add("bounds", cmd_bounds, "every applicable redundancy bound for (f, t)")
    p.add_argument("--t", type=int)
    p.add_argument("--r-max", type=int, help="eigenvalue-bound scan cap (default 8)")

    p = add("alpha", cmd_alpha, "exact independence number of the conflict graph")
    p.add_argument("--t", type=int)
    p.add_argument("--r", type=int, help="redundancy of the graph")

    p = add("nq", cmd_nq, "minimum parity length meeting a requirement matrix")
    p.add_argument(
        "target",
        nargs="?",
        choices=("fdm", "drm"),
        default="fdm",
        help="which requirement matrix to search when --func is given",
    )
    p.add_argument("--t", type=int)
    p.add_argument("--r-max", type=int, help="length cap (default 12 binary, else 8)")

    p = add("spectrum", cmd_spectrum, "graph eigenvalues in index-rank order")
    p.add_argument("--t", type=int)
    p.add_argument("--r", type=int, help="redundancy of the graph")

    p = add("construct", cmd_construct, "build and verify an encoder")
    p.add_argument("--t", type=int)
    p.add_argument("--r", type=int, help="force a graph search at this redundancy")
    p.add_argument("--r-max", type=int, help="length cap for the parity search")
    p.add_argument(
        "--parity", metavar="PATH", help="coset-wise parity words, one per line"
    )

    p = add("verify", cmd_verify, "check an encoder file against its function")
    p.add_argument("encoder", help="encoder file to check")

    p = add("decode", cmd_decode, "decode a received word to a function value")
    p.add_argument("encoder", help="encoder file to decode with")
    p.add_argument("word", help="received word as a digit string of length k+r")

    p = add("compare", cmd_compare, "per-k bound comparison sweep", func_source=False)
    p.add_argument("--q", type=int, help="field size (default 2)")
    p.add_argument("--d", type=int, help="minimum distance 2t+1")
    p.add_argument("--k-range", metavar="A:B", help="message lengths, inclusive")
    p.add_argument("--aq-table", metavar="PATH", help="external code-size table CSV")

    return parser


def main(argv=None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(raw)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_INPUT
    try:
        return args.handler(args, raw)
    except BudgetExceededError as exc:
        detail = f"error: budget exceeded: {exc}"
        if exc.best_lower is not None:
            detail += f" (best lower bound {exc.best_lower}, upper {exc.best_upper})"
        print(detail, file=sys.stderr)
        return EX_BUDGET
    except CodeNotFoundError as exc:
        print(json.dumps({"found": False, "reason": str(exc)}))
        return EX_NEGATIVE
    except DecodingFailureError as exc:
        print(json.dumps({"label": None, "reason": str(exc)}))
        return EX_NEGATIVE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_INPUT


if __name__ == "__main__":
    sys.exit(main())
