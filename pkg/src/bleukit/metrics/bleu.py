"""Corpus-level BLEU over metric-tokenized segments."""

import dataclasses
import enum
import math
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import (
    EmptyHypothesisError,
    EmptyReferenceError,
    LengthMismatchError,
    StatsMismatchError,
)
from ..signature import Signature, bleu_signature
from ..tokenizers import TokenizerKind, fold_case, get_tokenizer

__all__ = [
    "Smoothing",
    "RefLenPolicy",
    "BleuParams",
    "CorpusStats",
    "BleuResult",
    "extract_ngrams",
    "segment_stats",
    "aggregate",
    "smooth_precisions",
    "brevity_penalty",
    "compute_bleu",
    "corpus_stats",
    "corpus_bleu",
]

NGram = Tuple[str, ...]


class Smoothing(str, enum.Enum):
    EXP = "exp"
    FLOOR = "floor"
    NONE = "none"


class RefLenPolicy(str, enum.Enum):
    CLOSEST = "closest"
    SHORTEST = "shortest"


@dataclasses.dataclass(frozen=True)
class BleuParams:
    max_order: int = 4
    smoothing: Smoothing = Smoothing.EXP
    floor_value: float = 0.1
    ref_len_policy: RefLenPolicy = RefLenPolicy.CLOSEST
    lowercase: bool = False
    tokenizer: TokenizerKind = TokenizerKind.THIRTEEN_A

    def __post_init__(self):
        # Accept plain strings for the enum-valued fields.
        object.__setattr__(self, "smoothing", Smoothing(self.smoothing))
        object.__setattr__(self, "ref_len_policy", RefLenPolicy(self.ref_len_policy))
        object.__setattr__(self, "tokenizer", TokenizerKind(self.tokenizer))
        if isinstance(self.max_order, bool) or not isinstance(self.max_order, int) or self.max_order < 1:
            raise ValueError(f"max_order must be a positive integer, got {self.max_order!r}")
        if self.smoothing is Smoothing.FLOOR and not self.floor_value > 0:
            raise ValueError(f"floor smoothing needs a positive value, got {self.floor_value!r}")


@dataclasses.dataclass(frozen=True)
class CorpusStats:
    """Additive sufficient statistics for BLEU.

    ``correct[i]`` and ``total[i]`` hold counts for n-gram order ``i + 1``.
    ``ref_len`` is the sum of the selected reference length of every segment.
    """

    correct: Tuple[int, ...]
    total: Tuple[int, ...]
    hyp_len: int = 0
    ref_len: int = 0

    def __post_init__(self):
        object.__setattr__(self, "correct", tuple(self.correct))
        object.__setattr__(self, "total", tuple(self.total))
        if len(self.correct) != len(self.total):
            raise StatsMismatchError("correct and total must have one entry per order")

    @property
    def max_order(self) -> int:
        return len(self.total)

    @classmethod
    def zero(cls, max_order: int = 4) -> "CorpusStats":
        return cls((0,) * max_order, (0,) * max_order, 0, 0)

    def __add__(self, other: "CorpusStats") -> "CorpusStats":
        if not isinstance(other, CorpusStats):
            return NotImplemented
        if other.max_order != self.max_order:
            raise StatsMismatchError(
                f"cannot add stats of order {self.max_order} and {other.max_order}")
        return CorpusStats(
            tuple(a + b for a, b in zip(self.correct, other.correct)),
            tuple(a + b for a, b in zip(self.total, other.total)),
            self.hyp_len + other.hyp_len,
            self.ref_len + other.ref_len,
        )


@dataclasses.dataclass(frozen=True)
class BleuResult:
    score: float
    precisions: Tuple[float, ...]
    brevity_penalty: float
    ratio: float
    stats: CorpusStats
    signature: Signature
    # Number of orders that entered the geometric mean.
    effective_order: int
    diagnostic: Optional[str] = None

    @property
    def hyp_len(self) -> int:
        return self.stats.hyp_len

    @property
    def ref_len(self) -> int:
        return self.stats.ref_len


def extract_ngrams(tokens: Sequence[str], max_order: int) -> Dict[NGram, int]:
    """Count every contiguous n-gram of ``tokens`` with 1 <= n <= max_order.

    >>> extract_ngrams(["a", "b", "a"], 2) == {("a",): 2, ("b",): 1, ("a", "b"): 1, ("b", "a"): 1}
    True
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    tokens = tuple(tokens)
    counts: Counter = Counter()
    for n in range(1, min(max_order, len(tokens)) + 1):
        for i in range(len(tokens) - n + 1):
            counts[tokens[i:i + n]] += 1
    return dict(counts)


def _select_ref_len(hyp_len: int, ref_lens: Sequence[int], policy: RefLenPolicy) -> int:
    if policy is RefLenPolicy.SHORTEST:
        return min(ref_lens)
    # closest, ties go to the shorter reference
    return min(ref_lens, key=lambda r: (abs(r - hyp_len), r))


def segment_stats(hyp: Sequence[str], refs: Sequence[Sequence[str]],
                  params: BleuParams = BleuParams()) -> CorpusStats:
    """Sufficient statistics of one tokenized hypothesis against its references.

    Each hypothesis n-gram is clipped to the largest count it has in any
    single reference.
    """
    if not refs:
        raise EmptyReferenceError("segment_stats needs at least one reference")
    order = params.max_order
    hyp_counts = extract_ngrams(hyp, order)
    max_ref: Dict[NGram, int] = {}
    for ref in refs:
        for ngram, count in extract_ngrams(ref, order).items():
            if count > max_ref.get(ngram, 0):
                max_ref[ngram] = count

    correct = [0] * order
    total = [max(0, len(hyp) - n) for n in range(order)]
    for ngram, count in hyp_counts.items():
        correct[len(ngram) - 1] += min(count, max_ref.get(ngram, 0))

    ref_len = _select_ref_len(len(hyp), [len(r) for r in refs], params.ref_len_policy)
    return CorpusStats(tuple(correct), tuple(total), len(hyp), ref_len)


def aggregate(stats_list: Iterable[CorpusStats]) -> CorpusStats:
    """Component-wise sum of statistics (all entries must share one order)."""
    stats_list = list(stats_list)
    if not stats_list:
        raise ValueError("aggregate needs at least one CorpusStats")
    result = stats_list[0]
    for stats in stats_list[1:]:
        result = result + stats
    return result


def smooth_precisions(stats: CorpusStats, scheme=Smoothing.EXP,
                      floor_value: float = 0.1) -> List[Optional[float]]:
    """Per-order precisions after smoothing.

    Orders with no hypothesis n-grams at all come back as ``None`` and are
    left out of the geometric mean by the caller.

    ``exp`` keeps a counter that doubles at every zero-match order, so the
    k-th such order gets ``1 / (2**k * total)``.
    """
    scheme = Smoothing(scheme)
    if stats.total[0] == 0:
        raise EmptyHypothesisError("hypothesis corpus has no tokens")
    precisions: List[Optional[float]] = []
    divisor = 1
    for correct, total in zip(stats.correct, stats.total):
        if total == 0:
            precisions.append(None)
        elif scheme is Smoothing.FLOOR:
            precisions.append(max(correct, floor_value) / total)
        elif correct == 0 and scheme is Smoothing.EXP:
            divisor *= 2
            precisions.append(1.0 / (divisor * total))
        else:
            precisions.append(correct / total)
    return precisions


def brevity_penalty(hyp_len: int, ref_len: int) -> float:
    if hyp_len <= 0:
        raise EmptyHypothesisError("brevity penalty undefined for an empty hypothesis")
    if ref_len <= 0:
        raise EmptyReferenceError("brevity penalty undefined for an empty reference")
    if hyp_len >= ref_len:
        return 1.0
    return math.exp(1.0 - ref_len / hyp_len)


def compute_bleu(stats: CorpusStats, params: BleuParams, signature: Signature) -> BleuResult:
    """Turn aggregated statistics into a :class:`BleuResult`."""
    ratio = stats.hyp_len / stats.ref_len if stats.ref_len else 0.0
    if stats.hyp_len == 0:
        return BleuResult(0.0, (0.0,) * stats.max_order, 0.0, ratio, stats, signature, 0,
                          diagnostic="all hypothesis segments are empty; BLEU is 0")
    if stats.ref_len == 0:
        raise EmptyReferenceError("all selected reference segments are empty")

    smoothed = smooth_precisions(stats, params.smoothing, params.floor_value)
    used = [p for p in smoothed if p is not None]
    bp = brevity_penalty(stats.hyp_len, stats.ref_len)
    if any(p == 0.0 for p in used):
        score = 0.0
    else:
        score = 100.0 * bp * math.exp(math.fsum(math.log(p) for p in used) / len(used))
    # Guard the identity case against rounding in exp(log(1)).
    score = min(score, 100.0)
    precisions = tuple(0.0 if p is None else p for p in smoothed)
    return BleuResult(score, precisions, bp, ratio, stats, signature, len(used))


def _tokenize_all(lines: Sequence[str], params: BleuParams) -> List[List[str]]:
    tokenize = get_tokenizer(params.tokenizer)
    if params.lowercase:
        return [tokenize(fold_case(line)) for line in lines]
    return [tokenize(line) for line in lines]


def _check_streams(hyps: Sequence[str], ref_streams: Sequence[Sequence[str]]):
    if not hyps:
        raise EmptyHypothesisError("hypothesis corpus is empty")
    if not ref_streams:
        raise EmptyReferenceError("at least one reference stream is required")
    for i, refs in enumerate(ref_streams):
        if len(refs) != len(hyps):
            raise LengthMismatchError(
                f"reference stream {i} has {len(refs)} lines but the hypothesis has {len(hyps)}")


def corpus_stats(hyps: Sequence[str], ref_streams: Sequence[Sequence[str]],
                 params: BleuParams = BleuParams()) -> CorpusStats:
    hyps = list(hyps)
    ref_streams = [list(r) for r in ref_streams]
    _check_streams(hyps, ref_streams)
    hyp_toks = _tokenize_all(hyps, params)
    ref_toks = [_tokenize_all(stream, params) for stream in ref_streams]
    stats = CorpusStats.zero(params.max_order)
    for i, hyp in enumerate(hyp_toks):
        stats = stats + segment_stats(hyp, [stream[i] for stream in ref_toks], params)
    return stats


def corpus_bleu(hyps: Sequence[str], ref_streams: Sequence[Sequence[str]],
                params: BleuParams = BleuParams(), *, langpair: Optional[str] = None,
                test_set: Optional[str] = None) -> BleuResult:
    """Score detokenized hypotheses against one or more reference streams.

    ``ref_streams`` is a list of complete reference streams, each aligned
    line by line with ``hyps``.  The metric applies its own case folding and
    tokenization to both sides as configured in ``params``.
    """
    stats = corpus_stats(hyps, ref_streams, params)
    signature = bleu_signature(params, len(ref_streams), langpair, test_set)
    return compute_bleu(stats, params, signature)
