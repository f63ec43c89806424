"""Command-line surface: field construction, order queries, verification sweeps.

Every command emits a ReportDocument (config echo, flat rows, counterexamples,
verdict) rendered as text, json, or csv.  Output is exact and deterministic:
identical configuration yields byte-identical output, and the process exit
code is 0 exactly when the verdict is "pass".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import __version__
from .characters import AdditiveCharacter, char_order_bruteforce, char_order_fast
from .classify import (
    MEYN_SWEEP_PRIME_POWERS,
    VERIFICATION_GRID,
    classification_report,
    elements_by_order,
    find_primitive_normal,
    meyn_criterion,
    multiplicative_order,
    orders_coincide_iff_self_reciprocal,
    reciprocal_order_sweep,
)
from .action import fq_order
from .errors import ParseError, QOrderError
from .fields import DEFAULT_SIZE_BOUND, build_tower, base_field, element_tokens, parse_element
from .poly import (
    FqPoly,
    factor_xn_minus_1,
    is_self_reciprocal,
    monic_reciprocal,
    phi_q,
    poly_tokens,
)

_FORMATS = ("text", "json", "csv")
_MODES = ("oracle", "fast", "both")
_CHECKS = ("basis", "exhaustive")


@dataclass
class CommandConfig:
    """Resolved invocation parameters, echoed into every report."""

    command: str
    p: int = 2
    s: int = 1
    n: int | None = None
    seed: int = 0
    size_bound: int = DEFAULT_SIZE_BOUND
    output_format: str = "text"
    mode: str = "both"
    check: str = "basis"
    grid: bool = False
    extra: dict = field(default_factory=dict)

    def meta(self) -> dict:
        out = {
            "tool": "qorder",
            "version": __version__,
            "command": self.command,
            "p": self.p,
            "s": self.s,
            "n": self.n,
            "seed": self.seed,
            "size_bound": self.size_bound,
            "format": self.output_format,
            "mode": self.mode,
            "check": self.check,
            "grid": self.grid,
        }
        out.update(self.extra)
        return out


@dataclass
class ReportDocument:
    """What a command produces; verdict is "pass" iff counterexamples is empty."""

    meta: dict
    rows: list[dict]
    counterexamples: list[dict]

    @property
    def verdict(self) -> str:
        return "pass" if not self.counterexamples else "fail"


# -- rendering -----------------------------------------------------------------


def _cell(value, *, none: str = "-") -> str:
    if value is None:
        return none
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def render_text(doc: ReportDocument) -> str:
    lines = [f"# {key} = {_cell(value)}" for key, value in doc.meta.items()]
    if doc.rows:
        cols = list(doc.rows[0].keys())
        table = [[_cell(row[c]) for c in cols] for row in doc.rows]
        widths = [
            max(len(col), *(len(row[i]) for row in table))
            for i, col in enumerate(cols)
        ]
        lines.append("")
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        for row in table:
            lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    if doc.counterexamples:
        lines.append("")
        lines.append("counterexamples:")
        for ce in doc.counterexamples:
            parts = ", ".join(f"{k}={_cell(v)}" for k, v in ce.items())
            lines.append(f"  {parts}")
    lines.append("")
    lines.append(f"verdict: {doc.verdict}")
    return "\n".join(lines)


def render_json(doc: ReportDocument) -> str:
    return json.dumps(
        {
            "meta": doc.meta,
            "rows": doc.rows,
            "counterexamples": doc.counterexamples,
            "verdict": doc.verdict,
        },
        indent=2,
    )


def render_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if doc.rows:
        cols = list(doc.rows[0].keys())
        writer.writerow(cols)
        for row in doc.rows:
            writer.writerow([_cell(row[c], none="") for c in cols])
    return buf.getvalue().rstrip("\n")


_RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


# -- commands -------------------------------------------------------------------


def _require_n(config: CommandConfig) -> int:
    if config.n is None:
        raise ParseError("--n is required for this command")
    return config.n


def _field_entries(config: CommandConfig) -> list[tuple[int, int, int]]:
    if config.grid:
        return list(VERIFICATION_GRID)
    return [(config.p, config.s, _require_n(config))]


def cmd_factor(config: CommandConfig) -> ReportDocument:
    n = _require_n(config)
    fq = base_field(config.p, config.s)
    if fq.size > config.size_bound:
        raise QOrderError(f"base field size {fq.size} exceeds bound")
    fp = factor_xn_minus_1(n, fq, config.seed)
    rows = [
        {
            "factor": poly_tokens(g),
            "pretty": str(g),
            "degree": g.degree,
            "multiplicity": e,
            "self_reciprocal": is_self_reciprocal(g),
        }
        for g, e in fp.factors
    ]
    counterexamples = []
    expected = FqPoly.x_pow_minus_one(fq, n)
    if fp.expand() != expected:
        counterexamples.append(
            {"product": poly_tokens(fp.expand()), "expected": poly_tokens(expected)}
        )
    config.extra["divisor_count"] = fp.divisor_count()
    return ReportDocument(meta=config.meta(), rows=rows, counterexamples=counterexamples)


def cmd_orders(config: CommandConfig) -> ReportDocument:
    n = _require_n(config)
    tower = build_tower(config.p, config.s, n, size_bound=config.size_bound)
    fp = factor_xn_minus_1(n, tower.base, config.seed)
    report = classification_report(
        tower,
        fp,
        check=config.check,
        mode="fast" if config.mode == "fast" else "oracle",
        size_bound=config.size_bound,
    )
    rows = []
    counterexamples = []
    for r in report.rows:
        rows.append(
            {
                "divisor": poly_tokens(r.divisor),
                "pretty": str(r.divisor),
                "element_count": r.element_count,
                "phi_q": r.phi,
                "match": r.count_matches_phi,
                "char_count": r.char_count,
                "reciprocal": poly_tokens(r.reciprocal),
                "self_reciprocal": r.self_reciprocal,
            }
        )
        if not r.count_matches_phi:
            counterexamples.append(
                {
                    "divisor": poly_tokens(r.divisor),
                    "element_count": r.element_count,
                    "phi_q": r.phi,
                }
            )
    return ReportDocument(meta=config.meta(), rows=rows, counterexamples=counterexamples)


def cmd_verify_theorem(config: CommandConfig) -> ReportDocument:
    rows = []
    counterexamples = []
    for p, s, n in _field_entries(config):
        tower = build_tower(p, s, n, size_bound=config.size_bound)
        fp = factor_xn_minus_1(n, tower.base, config.seed)
        sweep = reciprocal_order_sweep(
            tower, fp, check=config.check, size_bound=config.size_bound
        )
        rows.append(
            {
                "p": p,
                "s": s,
                "n": n,
                "elements": sweep.total,
                "mismatches": len(sweep.mismatches),
            }
        )
        for x, scanned, reversed_order in sweep.mismatches:
            counterexamples.append(
                {
                    "p": p,
                    "s": s,
                    "n": n,
                    "label": element_tokens(x),
                    "order_bruteforce": poly_tokens(scanned),
                    "reciprocal_of_element_order": poly_tokens(reversed_order),
                }
            )
    return ReportDocument(meta=config.meta(), rows=rows, counterexamples=counterexamples)


def cmd_corollary1(config: CommandConfig) -> ReportDocument:
    rows = []
    counterexamples = []
    for p, s, n in _field_entries(config):
        tower = build_tower(p, s, n, size_bound=config.size_bound)
        fp = factor_xn_minus_1(n, tower.base, config.seed)
        result = orders_coincide_iff_self_reciprocal(
            tower, fp, check=config.check, size_bound=config.size_bound
        )
        rows.append({"p": p, "s": s, "n": n, "holds": result.holds})
        if not result.holds:
            x, m, char_order = result.counterexample
            counterexamples.append(
                {
                    "p": p,
                    "s": s,
                    "n": n,
                    "label": element_tokens(x),
                    "element_order": poly_tokens(m),
                    "char_order": poly_tokens(char_order),
                    "self_reciprocal": is_self_reciprocal(m),
                }
            )
    return ReportDocument(meta=config.meta(), rows=rows, counterexamples=counterexamples)


def cmd_corollary2(config: CommandConfig) -> ReportDocument:
    n_max = config.extra.get("n_max", 20)
    q_values = (
        MEYN_SWEEP_PRIME_POWERS if config.grid else (config.p**config.s,)
    )
    rows = []
    counterexamples = []
    for q in q_values:
        for n in range(1, n_max + 1):
            verdict = meyn_criterion(q, n, seed=config.seed)
            rows.append(
                {
                    "q": q,
                    "n": n,
                    "u": verdict.u,
                    "v": verdict.v,
                    "criterion_holds": verdict.criterion_holds,
                    "witness_j": verdict.witness_j,
                    "all_divisors_self_reciprocal": verdict.all_divisors_self_reciprocal,
                    "agree": verdict.consistent,
                }
            )
            if not verdict.consistent:
                counterexamples.append(
                    {
                        "q": q,
                        "n": n,
                        "criterion_holds": verdict.criterion_holds,
                        "all_divisors_self_reciprocal": verdict.all_divisors_self_reciprocal,
                    }
                )
    return ReportDocument(meta=config.meta(), rows=rows, counterexamples=counterexamples)


def cmd_char_order(config: CommandConfig, label_text: str) -> ReportDocument:
    n = _require_n(config)
    tower = build_tower(config.p, config.s, n, size_bound=config.size_bound)
    fp = factor_xn_minus_1(n, tower.base, config.seed)
    label = parse_element(tower, label_text)
    chi = AdditiveCharacter(label)
    m = fq_order(label, fp)
    config.extra["label"] = element_tokens(label)
    row = {
        "label": element_tokens(label),
        "element_order": poly_tokens(m),
        "element_order_pretty": str(m),
        "reciprocal": poly_tokens(monic_reciprocal(m)),
    }
    counterexamples = []
    if config.mode in ("oracle", "both"):
        scanned = char_order_bruteforce(chi, fp, check=config.check)
        row["order_bruteforce"] = poly_tokens(scanned)
    if config.mode in ("fast", "both"):
        fast = char_order_fast(chi, fp)
        row["order_fast"] = poly_tokens(fast)
    if config.mode == "both":
        row["agree"] = row["order_bruteforce"] == row["order_fast"]
        if not row["agree"]:
            counterexamples.append(
                {
                    "label": row["label"],
                    "order_bruteforce": row["order_bruteforce"],
                    "order_fast": row["order_fast"],
                }
            )
    return ReportDocument(
        meta=config.meta(), rows=[row], counterexamples=counterexamples
    )


def cmd_pnbt(config: CommandConfig) -> ReportDocument:
    rows = []
    counterexamples = []
    for p, s, n in _field_entries(config):
        tower = build_tower(p, s, n, size_bound=config.size_bound)
        fp = factor_xn_minus_1(n, tower.base, config.seed)
        element = find_primitive_normal(tower, fp, size_bound=config.size_bound)
        normal_count = len(
            elements_by_order(tower, fp, size_bound=config.size_bound)[fp.expand()]
        )
        phi_full = phi_q(fp)
        rows.append(
            {
                "p": p,
                "s": s,
                "n": n,
                "element": element_tokens(element),
                "multiplicative_order": multiplicative_order(element),
                "group_order": tower.size - 1,
                "normal_count": normal_count,
                "phi_q_full": phi_full,
            }
        )
        if normal_count != phi_full or phi_full <= 0:
            counterexamples.append(
                {"p": p, "s": s, "n": n, "normal_count": normal_count, "phi_q_full": phi_full}
            )
    return ReportDocument(meta=config.meta(), rows=rows, counterexamples=counterexamples)


# -- argument parsing -------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, *, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--p", type=int, default=default(2), help="characteristic (prime)")
    parser.add_argument("--s", type=int, default=default(1), help="base degree: q = p^s")
    parser.add_argument("--n", type=int, default=default(None), help="extension degree")
    parser.add_argument("--seed", type=int, default=default(0), help="factorization seed")
    parser.add_argument(
        "--size-bound",
        type=int,
        default=default(DEFAULT_SIZE_BOUND),
        help="largest allowed field cardinality",
    )
    parser.add_argument("--format", choices=_FORMATS, default=default("text"))
    parser.add_argument("--mode", choices=_MODES, default=default("both"))
    parser.add_argument("--check", choices=_CHECKS, default=default("basis"))
    parser.add_argument(
        "--grid",
        action="store_true",
        default=default(False),
        help="sweep the standard verification grid instead of one field",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qorder",
        description="Exact F_q-orders of finite-field elements and additive characters.",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("factor", "factor x^n - 1 over F_q"),
        ("orders", "partition F_{q^n} by element order and cross-check phi_q"),
        ("verify-theorem", "compare character orders against reciprocal element orders"),
        ("corollary1", "check order coincidence happens exactly on self-reciprocal orders"),
        ("corollary2", "tabulate the Meyn criterion against the factorization scan"),
        ("char-order", "orders of one character chi_a"),
        ("pnbt", "find a primitive normal element and count normal elements"),
    ):
        sp = sub.add_parser(name, help=help_text)
        _add_common(sp, suppress=True)
        if name == "corollary2":
            sp.add_argument("--n-max", type=int, default=20, help="check n = 1..n_max")
        if name == "char-order":
            sp.add_argument("label", help="element tokens, e.g. '0,1'")
    return parser


def _resolve_config(args: argparse.Namespace) -> CommandConfig:
    seed = args.seed
    env_seed = os.environ.get("QORDER_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError as exc:
            raise ParseError(f"QORDER_SEED={env_seed!r} is not an integer") from exc
    config = CommandConfig(
        command=args.command,
        p=args.p,
        s=args.s,
        n=args.n,
        seed=seed,
        size_bound=args.size_bound,
        output_format=args.format,
        mode=args.mode,
        check=args.check,
        grid=args.grid,
    )
    if config.command == "corollary2":
        config.extra["n_max"] = args.n_max
    return config


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed its message
        return int(exc.code or 0)
    try:
        config = _resolve_config(args)
        if config.command == "char-order":
            doc = cmd_char_order(config, args.label)
        else:
            handler = {
                "factor": cmd_factor,
                "orders": cmd_orders,
                "verify-theorem": cmd_verify_theorem,
                "corollary1": cmd_corollary1,
                "corollary2": cmd_corollary2,
                "pnbt": cmd_pnbt,
            }[config.command]
            doc = handler(config)
    except (QOrderError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_RENDERERS[config.output_format](doc))
    return 0 if doc.verdict == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
