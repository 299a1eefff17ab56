"""Command-line scorer.

    cat output.detok | bleukit -t wmt14 -l en-de
    bleukit --echo src -t wmt14 -l en-de > wmt14.en-de.en
    bleukit ref.de < output.detok

Only the report line goes to stdout; everything else goes to stderr.
"""

import argparse
import sys
from decimal import ROUND_HALF_UP, Decimal
from typing import List, Optional, Sequence, TextIO, Union

from . import __version__
from .datasets import CACHE_ENV, CacheLayout, Registry, default_registry, get_references, get_side, list_test_sets
from .errors import BleuKitError
from .metrics import BleuParams, BleuResult, ChrfResult, corpus_bleu, corpus_chrf

__all__ = ["build_parser", "format_report", "format_number", "run", "main"]

USER_REFS_NOTICE = (
    "bleukit: scoring against user-supplied reference files. This score is comparable to others "
    "only if everyone used byte-identical reference files; prefer -t/-l with a registered test set."
)


def format_number(value: float, width: int) -> str:
    """Round half-up to ``width`` decimals (display only)."""
    quantum = Decimal(1).scaleb(-width)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def format_report(result: Union[BleuResult, ChrfResult], width: int = 1, short_sig: bool = False,
                  score_only: bool = False) -> str:
    if width < 0:
        raise ValueError("width must be non-negative")
    score = format_number(result.score, width)
    if score_only:
        return score
    signature = result.signature.render(short=short_sig)
    if isinstance(result, ChrfResult):
        return f"{signature} = {score}"
    precisions = "/".join(format_number(100 * p, width) for p in result.precisions)
    return (f"{signature} = {score} {precisions} "
            f"(BP = {format_number(result.brevity_penalty, 3)} ratio = {format_number(result.ratio, 3)} "
            f"hyp_len = {result.hyp_len} ref_len = {result.ref_len})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bleukit",
        description="Corpus BLEU/chrF with metric-internal tokenization and managed test sets. "
                    "Reads detokenized system output, one segment per line.",
    )
    parser.add_argument("refs", nargs="*", metavar="REF",
                        help="reference files, each one complete stream (instead of -t/-l)")
    parser.add_argument("-t", "--test-set", help="registered test set, e.g. wmt14 or wmt14/full")
    parser.add_argument("-l", "--language-pair", help="source-target language pair, e.g. en-de")
    parser.add_argument("-i", "--input", help="read hypotheses from this file instead of stdin")
    parser.add_argument("-m", "--metric", choices=["bleu", "chrf"], default="bleu")
    parser.add_argument("-lc", dest="lowercase", action="store_true", help="case-insensitive BLEU")
    parser.add_argument("-tok", "--tokenize", choices=["13a", "none"], default="13a")
    parser.add_argument("--smooth", choices=["exp", "floor", "none"], default="exp")
    parser.add_argument("--smooth-value", type=float, default=0.1, help="value for --smooth floor")
    parser.add_argument("--ref-len", choices=["closest", "shortest"], default="closest",
                        help="reference length used for the brevity penalty with several references")
    parser.add_argument("--ref-index", type=int, action="append",
                        help="use only this reference of a test set (repeatable; zero-based)")
    parser.add_argument("--chrf-order", type=int, default=6)
    parser.add_argument("--chrf-beta", type=float, default=2.0)
    parser.add_argument("--short", action="store_true", help="short signature keys")
    parser.add_argument("-b", "--score-only", action="store_true", help="print only the score, no signature")
    parser.add_argument("-w", "--width", type=int, default=1, help="decimal places to display")
    parser.add_argument("--echo", choices=["src", "ref"], help="print one side of the test set and exit")
    parser.add_argument("--list", action="store_true", help="list registered test sets and exit")
    parser.add_argument("--cache-dir", help=f"test-set cache (default: ${CACHE_ENV} or a per-user data dir)")
    parser.add_argument("--registry", help="additional registry file describing private test sets")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def _read_lines(stream) -> List[str]:
    data = stream.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    lines = data.split("\n")
    if lines[-1] == "":
        lines.pop()
    return lines


def _read_file(path: str) -> List[str]:
    with open(path, "rb") as fh:
        return _read_lines(fh)


def _validate(args, parser):
    if args.width < 0:
        parser.error("--width must be non-negative")
    if args.list:
        return
    if args.echo:
        if not (args.test_set and args.language_pair):
            parser.error("--echo requires -t/--test-set and -l/--language-pair")
        if args.refs:
            parser.error("--echo cannot be combined with reference files")
        return
    if args.test_set and args.refs:
        parser.error("give either -t/--test-set or reference files, not both")
    if not args.test_set and not args.refs:
        parser.error("no references: give -t/--test-set with -l/--language-pair, or reference files")
    if args.test_set and not args.language_pair:
        parser.error("-t/--test-set requires -l/--language-pair")
    if args.ref_index and not args.test_set:
        parser.error("--ref-index only applies to registered test sets")


def run(argv: Optional[Sequence[str]] = None, stdin=None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """Run the command line; returns the exit status."""
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)

    def fail(message: str) -> int:
        print(f"bleukit: error: {message}", file=stderr)
        return 1

    try:
        registry: Registry = default_registry()
        if args.registry:
            registry = registry.extended(args.registry)
        cache = CacheLayout(args.cache_dir) if args.cache_dir else CacheLayout()

        if args.list:
            for name, pairs, citation in list_test_sets(registry):
                print(f"{name}\t{','.join(pairs)}\t{citation}", file=stdout)
            return 0

        if args.echo:
            index = (args.ref_index or [0])[0]
            lines = get_side(args.test_set, args.language_pair, args.echo, index, cache, registry)
            stdout.write("".join(line + "\n" for line in lines))
            return 0

        if args.test_set:
            refs = get_references(args.test_set, args.language_pair, cache, registry)
            if args.ref_index:
                for i in args.ref_index:
                    if not 0 <= i < len(refs):
                        return fail(f"{args.test_set}/{args.language_pair} has {len(refs)} reference(s); "
                                    f"--ref-index {i} is out of range")
                refs = [refs[i] for i in args.ref_index]
        else:
            print(USER_REFS_NOTICE, file=stderr)
            refs = [_read_file(path) for path in args.refs]

        hyps = _read_file(args.input) if args.input else _read_lines(stdin)

        if args.metric == "chrf":
            result = corpus_chrf(hyps, refs, char_order=args.chrf_order, beta=args.chrf_beta,
                                 langpair=args.language_pair, test_set=args.test_set)
        else:
            params = BleuParams(smoothing=args.smooth, floor_value=args.smooth_value,
                                ref_len_policy=args.ref_len, lowercase=args.lowercase,
                                tokenizer=args.tokenize)
            result = corpus_bleu(hyps, refs, params, langpair=args.language_pair, test_set=args.test_set)
            if result.diagnostic:
                print(f"bleukit: warning: {result.diagnostic}", file=stderr)
        print(format_report(result, args.width, args.short, args.score_only), file=stdout)
        return 0
    except UnicodeDecodeError as exc:
        return fail(f"input is not valid UTF-8: {exc}")
    except (BleuKitError, OSError, ValueError) as exc:
        return fail(str(exc))


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
