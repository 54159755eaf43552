"""
Command-line front end. Subcommands: sort, word, count, bound, asymptote,
verify. Output is text for humans or JSON/CSV for machines; JSON is
byte-stable across runs for identical inputs.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .counting import (
    CountCache,
    brute_force_count,
    catalan,
    three_stack_bound,
    trivial_bound,
    two_stack_count,
)
from .growth import bound_nth_root, critical_point, maximize_growth_rate
from .machine import (
    is_genuine_word,
    iterate_stack_sort,
    min_sorting_passes,
    run_series_machine,
)
from .perms import format_permutation, is_identity, parse_permutation
from .verify import LEVELS, run_verification
from .words import count_factor, decode, forbidden_factor_violations, image_word, validate_word

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

HARD_ENUMERATION_CAP = 12
CONVERGENCE_SAMPLES = (10, 50, 200, 1000, 2000)


@dataclass
class CliConfig:
    output_format: str = "text"
    enumeration_limit: int = 10
    cache_path: str | None = None
    tolerance: float = 1e-10


def _emit(config: CliConfig, payload: dict, text_lines: list[str]) -> None:
    if config.output_format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif config.output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        rows = payload.pop("rows", None)
        if rows:
            writer.writerow(rows[0].keys())
            for row in rows:
                writer.writerow(row.values())
        else:
            writer.writerow(["key", "value"])
            for key in sorted(payload):
                writer.writerow([key, payload[key]])
        sys.stdout.write(buffer.getvalue())
    else:
        for line in text_lines:
            print(line)


def _cmd_sort(config: CliConfig, args: argparse.Namespace) -> int:
    p = parse_permutation(args.permutation)
    result = iterate_stack_sort(p, args.passes)
    payload = {
        "input": format_permutation(p),
        "passes": args.passes,
        "result": format_permutation(result),
        "sortable": is_identity(result),
        "min_passes": min_sorting_passes(p),
    }
    text = [
        f"result after {args.passes} pass(es): {payload['result']}",
        f"sortable with {args.passes} pass(es): {'yes' if payload['sortable'] else 'no'}",
        f"minimal passes to sort: {payload['min_passes']}",
    ]
    _emit(config, payload, text)
    return EXIT_OK


def _cmd_word_encode(config: CliConfig, args: argparse.Namespace) -> int:
    p = parse_permutation(args.value)
    run = run_series_machine(p, args.stacks, record_steps=args.trace)
    word = run.word
    payload: dict = {
        "input": format_permutation(p),
        "stacks": args.stacks,
        "word": word.letters,
        "aa_factors": count_factor(word, "AA"),
        "output": format_permutation(run.output),
    }
    text = [f"word: {word.letters}", f"AA factors: {payload['aa_factors']}"]
    if args.stacks == 3:
        v = image_word(word)
        hits = forbidden_factor_violations(word)
        payload["projection"] = v.letters
        payload["bb_factors_in_projection"] = count_factor(v, "BB")
        payload["violations"] = [{"rule": rule, "index": index} for rule, index in hits]
        text.append(f"projection over BCD: {v.letters}")
        text.append(f"BB factors in projection: {payload['bb_factors_in_projection']}")
        text.append(f"violations: {payload['violations']}")
    if args.trace:
        payload["steps"] = [step.as_record() for step in run.steps]
        text.extend(
            f"step {s.step}: {s.letter} moves {s.value}  stacks={[list(x) for x in s.stacks]} "
            f"out={list(s.output)}"
            for s in run.steps
        )
    _emit(config, payload, text)
    return EXIT_OK


def _cmd_word_decode(config: CliConfig, args: argparse.Namespace) -> int:
    word = validate_word(args.value, args.stacks)
    recovered = decode(word)
    payload = {
        "word": word.letters,
        "stacks": args.stacks,
        "permutation": format_permutation(recovered),
        "roundtrip": is_genuine_word(word),
    }
    text = [
        f"permutation: {payload['permutation']}",
        f"re-encoding reproduces the word: {'yes' if payload['roundtrip'] else 'no'}",
    ]
    _emit(config, payload, text)
    return EXIT_OK


def _cmd_count(config: CliConfig, args: argparse.Namespace) -> int:
    n, t, mode = args.length, args.stacks, args.mode
    payload: dict = {"n": n, "t": t, "mode": mode}
    text: list[str] = []
    exit_code = EXIT_OK

    formula_value: int | None = None
    bound_value: int | None = None
    if mode in ("formula", "both"):
        if t == 1:
            formula_value = catalan(n)
        elif t == 2:
            formula_value = two_stack_count(n)
        else:
            bound_value = three_stack_bound(n) if t == 3 else trivial_bound(n, t)
            payload["upper_bound"] = bound_value
            payload["warning"] = f"no closed formula for t = {t}; reporting an upper bound, not a count"
            text.append(f"upper bound: {bound_value}   (no closed formula for t = {t})")
        if formula_value is not None:
            payload["formula"] = formula_value
            text.append(f"formula count: {formula_value}")

    brute_value: int | None = None
    if mode in ("brute", "both"):
        if n > config.enumeration_limit:
            raise ValueError(f"n={n} exceeds enumeration limit {config.enumeration_limit}")
        if config.cache_path:
            cache = CountCache(config.cache_path)
            brute_value = cache.counted(n, t, config.enumeration_limit)
            cache.save()
        else:
            brute_value = brute_force_count(n, t, config.enumeration_limit)
        payload["brute"] = brute_value
        text.append(f"brute-force count: {brute_value}")

    if mode == "both":
        if formula_value is not None:
            verdict = "AGREE" if formula_value == brute_value else "DISAGREE"
        else:
            verdict = "CONSISTENT" if brute_value <= bound_value else "INCONSISTENT"
        payload["verdict"] = verdict
        text.append(f"verdict: {verdict}")
        if verdict in ("DISAGREE", "INCONSISTENT"):
            exit_code = EXIT_VERIFICATION_FAILED

    _emit(config, payload, text)
    return exit_code


def _cmd_bound(config: CliConfig, args: argparse.Namespace) -> int:
    n, t = args.length, args.stacks
    payload: dict = {"n": n, "t": t, "trivial_bound": trivial_bound(n, t)}
    text = [f"trivial upper bound (t+1)^(2n): {payload['trivial_bound']}"]
    if t == 3:
        payload["insertion_bound"] = three_stack_bound(n)
        text.append(f"insertion upper bound: {payload['insertion_bound']}")
    _emit(config, payload, text)
    return EXIT_OK


def _cmd_asymptote(config: CliConfig, args: argparse.Namespace) -> int:
    golden = maximize_growth_rate(config.tolerance, "golden_section")
    bisection = maximize_growth_rate(config.tolerance, "derivative_bisection")
    closed = critical_point()
    convergence = [{"n": n, "bound_nth_root": bound_nth_root(n)} for n in CONVERGENCE_SAMPLES]
    payload = {
        "x_star": golden.x_star,
        "g_star": golden.g_star,
        "method": golden.method,
        "iterations": golden.iterations,
        "tolerance": golden.tolerance,
        "x_star_bisection": bisection.x_star,
        "x_star_closed_form": closed,
        "rows": convergence,
    }
    text = [
        f"x_star (golden section):      {golden.x_star:.7g}",
        f"x_star (derivative bisection): {bisection.x_star:.7g}",
        f"x_star (closed form):          {closed:.7g}",
        f"maximum growth rate: {golden.g_star:.7g}",
        "n-th root of the exact bound:",
    ]
    text.extend(f"  n={row['n']:>5}: {row['bound_nth_root']:.6f}" for row in convergence)
    if config.output_format == "json":
        payload["convergence"] = payload.pop("rows")
    _emit(config, payload, text)
    return EXIT_OK


def _cmd_verify(config: CliConfig, args: argparse.Namespace) -> int:
    results = run_verification(args.level)
    passed = all(r.passed for r in results)
    payload = {
        "level": args.level,
        "passed": passed,
        "rows": [
            {"name": r.name, "passed": r.passed, "detail": r.detail, "witnesses": "; ".join(r.witnesses)}
            for r in results
        ],
    }
    text = []
    for r in results:
        text.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
        text.extend(f"       witness: {w}" for w in r.witnesses)
    text.append(f"{sum(r.passed for r in results)}/{len(results)} property families passed")
    if config.output_format == "json":
        payload["checks"] = payload.pop("rows")
        for check in payload["checks"]:
            check["witnesses"] = check["witnesses"].split("; ") if check["witnesses"] else []
    _emit(config, payload, text)
    return EXIT_OK if passed else EXIT_VERIFICATION_FAILED


def _positive_float(value: str) -> float:
    x = float(value)
    if x <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return x


def _enumeration_limit(value: str) -> int:
    n = int(value)
    if not 1 <= n <= HARD_ENUMERATION_CAP:
        raise argparse.ArgumentTypeError(f"limit must be in 1..{HARD_ENUMERATION_CAP}, got {value}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stackwords",
        description="Stack sorting, stack words, and exact enumeration of t-stack sortable permutations.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text", dest="output_format")
    parser.add_argument("--limit", type=_enumeration_limit, default=10, dest="enumeration_limit",
                        help="max length for brute-force enumeration (<= %d)" % HARD_ENUMERATION_CAP)
    parser.add_argument("--cache", dest="cache_path", default=None, help="CSV cache for brute-force counts")
    parser.add_argument("--tolerance", type=_positive_float, default=1e-10, help="x tolerance for maximization")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sort = sub.add_parser("sort", help="apply the stack-sorting operator repeatedly")
    p_sort.add_argument("permutation")
    p_sort.add_argument("-t", "--passes", type=int, default=1)
    p_sort.set_defaults(handler=_cmd_sort)

    p_word = sub.add_parser("word", help="encode a permutation as a stack word, or decode one")
    p_word.add_argument("direction", choices=("encode", "decode"))
    p_word.add_argument("value", help="permutation (encode) or word (decode)")
    p_word.add_argument("-t", "--stacks", type=int, default=3)
    p_word.add_argument("--trace", action="store_true", help="emit per-step machine records (encode only)")
    p_word.set_defaults(handler=lambda cfg, a: _cmd_word_encode(cfg, a) if a.direction == "encode" else _cmd_word_decode(cfg, a))

    p_count = sub.add_parser("count", help="count t-stack sortable permutations")
    p_count.add_argument("-n", "--length", type=int, required=True)
    p_count.add_argument("-t", "--stacks", type=int, default=1)
    p_count.add_argument("--mode", choices=("formula", "brute", "both"), default="both")
    p_count.set_defaults(handler=_cmd_count)

    p_bound = sub.add_parser("bound", help="upper bounds for the t-stack sortable count")
    p_bound.add_argument("-n", "--length", type=int, required=True)
    p_bound.add_argument("-t", "--stacks", type=int, default=3)
    p_bound.set_defaults(handler=_cmd_bound)

    p_asym = sub.add_parser("asymptote", help="maximize the growth rate and tabulate convergence")
    p_asym.set_defaults(handler=_cmd_asymptote)

    p_verify = sub.add_parser("verify", help="run the self-verification property suites")
    p_verify.add_argument("--level", choices=LEVELS, default="quick")
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = CliConfig(
        output_format=args.output_format,
        enumeration_limit=args.enumeration_limit,
        cache_path=args.cache_path,
        tolerance=args.tolerance,
    )
    try:
        return args.handler(config, args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
