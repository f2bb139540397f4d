"""Command-line front end: enumeration, tree export, verification, histograms.

Exit codes: 0 success, 1 failed assertion or domain guard, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Iterable, Sequence

from concurrent.futures import ThreadPoolExecutor

from .core import enumerate_rank, word_text
from .fstat import f_product, f_recursive
from .macdonald import MacdonaldNode, build_tree, f_valued_row, is_odd_word
from .primes import coprime_count, is_coprime_direct, is_coprime_structural, residue_distribution_mod_p
from .residues import (
    ENUMERATION_MAX_RANK,
    is_equidistributed,
    pi_multiset,
    residue_histogram_dp,
    residue_histogram_enum,
    verify_main_theorem,
    verify_one_step,
)


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _table(records: list[dict[str, Any]]) -> str:
    keys = list(records[0]) if records else []
    rows = [[_cell(r[k]) for k in keys] for r in records]
    widths = [max(len(k), *(len(row[i]) for row in rows)) if rows else len(k) for i, k in enumerate(keys)]
    lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _csv(records: list[dict[str, Any]]) -> str:
    keys = list(records[0]) if records else []
    lines = [",".join(keys)]
    for r in records:
        lines.append(",".join(_cell(r[k]) for k in keys))
    return "\n".join(lines)


def _records_text(records: list[dict[str, Any]], fmt: str, ok: bool | None = None) -> str:
    if fmt == "json":
        payload: Any = records if ok is None else {"ok": ok, "records": records}
        return json.dumps(payload, indent=2)
    if fmt == "jsonl":
        return "\n".join(json.dumps(r) for r in records)
    if fmt == "csv":
        return _csv(records)
    return _table(records)


def _map_rows(fn: Callable[[Any], dict[str, Any]], items: Iterable[Any], threads: int) -> list[dict[str, Any]]:
    items = list(items)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.filter == "coprime" and args.prime is None:
        args.parser.error("--filter coprime requires --prime/-p")
    words = enumerate_rank(args.rank)
    if args.filter == "odd":
        words = [w for w in words if is_odd_word(w)]
    elif args.filter == "coprime":
        words = [w for w in words if is_coprime_direct(w, args.prime)]
    empty = "" if args.format in ("json", "jsonl") else "e"
    records = [
        {
            "word": word_text(w, empty=empty),
            "rank": args.rank,
            "f": str(f_product(w)),
            "odd": is_odd_word(w),
        }
        for w in words
    ]
    _emit(_records_text(records, args.format), args.out)
    return 0


def _tree_json(node: MacdonaldNode) -> dict[str, Any]:
    return {
        "word": word_text(node.word, empty=""),
        "f": str(node.f),
        "children": [_tree_json(c) for c in node.children],
    }


def cmd_tree(args: argparse.Namespace) -> int:
    if args.max_rank > ENUMERATION_MAX_RANK:
        raise ValueError(f"max rank {args.max_rank} exceeds the enumeration guard of {ENUMERATION_MAX_RANK}")
    tree = build_tree(args.max_rank)
    if args.format == "json":
        _emit(json.dumps({"max_rank": tree.max_rank, "root": _tree_json(tree.root)}, indent=2), args.out)
        return 0
    rows = tree.rows()
    lines = ["graph macdonald_tree {"]
    for row in rows:
        for node in row:
            name = word_text(node.word)
            label = f"{name} : {node.f}" if args.f_valued else name
            lines.append(f'  "{name}" [label="{label}"];')
    for row in rows:
        for node in row:
            for child in node.children:
                lines.append(f'  "{word_text(node.word)}" -- "{word_text(child.word)}";')
    lines.append("}")
    _emit("\n".join(lines), args.out)
    return 0


def _suite_main(args: argparse.Namespace) -> list[dict[str, Any]]:
    return [
        {"check": "flat-row", "k": v.k, "n": v.n, "ok": v.flat}
        for v in verify_main_theorem(args.modulus_pow, args.n_extra)
    ]


def _suite_one_step(args: argparse.Namespace) -> list[dict[str, Any]]:
    return [
        {
            "check": "step",
            "k": v.k,
            "n": v.n,
            "flat_n": v.flat_before,
            "flat_next": v.flat_after,
            "step_identity": v.step_identity,
            "ok": v.ok,
        }
        for v in verify_one_step(args.modulus_pow, args.max_n)
    ]


def _suite_pi_row(args: argparse.Namespace) -> list[dict[str, Any]]:
    def check(n: int) -> dict[str, Any]:
        products = pi_multiset(n, strict=args.strict_pi)
        size = sum(products.values())
        match = products == f_valued_row(n)
        return {
            "check": "pi-row",
            "n": n,
            "strict": args.strict_pi,
            "cardinality": size,
            "ok": match and size == 1 << (n // 2),
        }

    return _map_rows(check, range(args.max_n + 1), args.threads)


def _suite_coprime(args: argparse.Namespace) -> list[dict[str, Any]]:
    primes = args.prime or [2, 3, 5, 7]

    def check(pn: tuple[int, int]) -> dict[str, Any]:
        p, n = pn
        enum = coprime_count(p, n, method="enum").count
        closed = coprime_count(p, n, method="closed").count
        predicates = all(
            is_coprime_structural(w, p) == is_coprime_direct(w, p) for w in enumerate_rank(n)
        )
        return {
            "check": "coprime",
            "p": p,
            "n": n,
            "count": enum,
            "closed_form_count": closed,
            "agree": enum == closed,
            "predicates_agree": predicates,
            "ok": enum == closed and predicates,
        }

    pairs = [(p, n) for p in primes for n in range(args.max_n + 1)]
    return _map_rows(check, pairs, args.threads)


def _suite_oracle(args: argparse.Namespace) -> list[dict[str, Any]]:
    def check(n: int) -> dict[str, Any]:
        row = enumerate_rank(n)
        agree = all(f_product(w) == f_recursive(w) for w in row)
        return {"check": "oracle", "n": n, "words": len(row), "ok": agree}

    return _map_rows(check, range(args.max_rank + 1), args.threads)


_SUITES = {
    "main": _suite_main,
    "one-step": _suite_one_step,
    "pi-row": _suite_pi_row,
    "coprime": _suite_coprime,
    "oracle": _suite_oracle,
}


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite in ("main", "one-step") and args.modulus_pow is None:
        args.parser.error(f"suite {args.suite} requires --modulus-pow/-k")
    records = _SUITES[args.suite](args)
    ok = all(r["ok"] for r in records)
    text = _records_text(records, args.format, ok=ok)
    if args.format == "table":
        passed = sum(1 for r in records if r["ok"])
        text += f"\n{passed}/{len(records)} checks passed"
    _emit(text, args.out)
    if not ok:
        print(f"FAIL: suite {args.suite}", file=sys.stderr)
    return 0 if ok else 1


def cmd_residues(args: argparse.Namespace) -> int:
    if args.prime is not None and args.method is not None:
        args.parser.error("--method applies only to power-of-two moduli (-k)")
    if args.modulus_pow is not None:
        method = args.method or "dp"
        compute = residue_histogram_enum if method == "enum" else residue_histogram_dp
        h = compute(args.rank, args.modulus_pow)
        modulus, counts = h.modulus, h.counts
        flat = is_equidistributed(h)
    else:
        method = None
        counts = residue_distribution_mod_p(args.rank, args.prime)
        modulus = args.prime
        flat = len(set(counts.values())) == 1
    verdict = "flat" if flat else "not-flat"
    if args.format == "json":
        payload = {
            "n": args.rank,
            "modulus": modulus,
            "counts": {str(r): c for r, c in counts.items()},
            "flat": flat,
        }
        if method is not None:
            payload["method"] = method
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        records = [{"residue": r, "count": c} for r, c in counts.items()]
        text = _records_text(records, args.format)
        if args.format == "csv":
            print(f"verdict: {verdict}", file=sys.stderr)
        else:
            text += f"\nverdict: {verdict}"
        _emit(text, args.out)
    if args.assert_flat and not flat:
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yflattice",
        description="Exact-arithmetic toolkit for the Young-Fibonacci lattice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list the words of one rank with their chain counts")
    p_enum.add_argument("-n", "--rank", type=int, required=True)
    p_enum.add_argument("--filter", choices=("all", "odd", "coprime"), default="all")
    p_enum.add_argument("-p", "--prime", type=int, help="prime for --filter coprime")
    p_enum.add_argument("--format", choices=("table", "csv", "json", "jsonl"), default="table")
    p_enum.add_argument("--out", help="write output to this path instead of stdout")
    p_enum.set_defaults(cmd=cmd_enumerate, parser=p_enum)

    p_tree = sub.add_parser("tree", help="export the tree of odd words as DOT or JSON")
    p_tree.add_argument("--max-rank", type=int, required=True)
    p_tree.add_argument("--f-valued", action="store_true", help="label nodes with their chain counts")
    p_tree.add_argument("--format", choices=("dot", "json"), default="dot")
    p_tree.add_argument("--out", help="write output to this path instead of stdout")
    p_tree.set_defaults(cmd=cmd_tree, parser=p_tree)

    p_verify = sub.add_parser("verify", help="run a verification suite; exit 0 iff everything holds")
    p_verify.add_argument("suite", choices=tuple(_SUITES))
    p_verify.add_argument("-k", "--modulus-pow", type=int, help="modulus exponent for main/one-step")
    p_verify.add_argument("--n-extra", type=int, default=2, help="rows past the threshold (suite main)")
    p_verify.add_argument("--max-n", type=int, default=None, help="row bound (one-step, pi-row, coprime)")
    p_verify.add_argument("--max-rank", type=int, default=12, help="rank bound (suite oracle)")
    p_verify.add_argument("-p", "--prime", type=int, action="append", help="prime for suite coprime, repeatable")
    p_verify.add_argument("--strict-pi", action="store_true", help="literal odd-factors-up-to-n reading (nonconforming)")
    p_verify.add_argument("--threads", type=int, default=1, help="parallelize independent row checks")
    p_verify.add_argument("--format", choices=("table", "csv", "json", "jsonl"), default="table")
    p_verify.add_argument("--out", help="write output to this path instead of stdout")
    p_verify.set_defaults(cmd=cmd_verify, parser=p_verify)

    p_res = sub.add_parser("residues", help="histogram of chain-count residues for one rank")
    p_res.add_argument("-n", "--rank", type=int, required=True)
    modulus = p_res.add_mutually_exclusive_group(required=True)
    modulus.add_argument("-k", "--modulus-pow", type=int, help="use modulus 2^k over the odd words")
    modulus.add_argument("-p", "--prime", type=int, help="use an odd prime modulus over the whole rank")
    p_res.add_argument("--method", choices=("dp", "enum"), help="histogram path for -k (default dp)")
    p_res.add_argument("--assert", dest="assert_flat", action="store_true", help="exit 1 unless the histogram is flat")
    p_res.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p_res.add_argument("--out", help="write output to this path instead of stdout")
    p_res.set_defaults(cmd=cmd_residues, parser=p_res)

    return parser


_MAX_N_DEFAULTS = {"one-step": 12, "pi-row": 16, "coprime": 18}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "max_n", None) is None and getattr(args, "suite", None) in _MAX_N_DEFAULTS:
            args.max_n = _MAX_N_DEFAULTS[args.suite]
        return args.cmd(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_exit() -> None:
    raise SystemExit(main())
