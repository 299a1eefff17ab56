"""Character n-gram F-score (chrF)."""

import dataclasses
import re
from collections import Counter
from typing import List, Optional, Sequence, Tuple

from ..errors import EmptyHypothesisError, EmptyReferenceError, LengthMismatchError
from ..signature import Signature, chrf_signature

__all__ = ["ChrfResult", "char_ngram_stats", "corpus_chrf", "chrf_from_stats"]

_WS = re.compile(r"\s+")


@dataclasses.dataclass(frozen=True)
class ChrfResult:
    score: float
    char_order: int
    beta: float
    precision: float
    recall: float
    signature: Signature


def _char_ngrams(text: str, n: int) -> Counter:
    return Counter(text[i:i + n] for i in range(len(text) - n + 1))


def char_ngram_stats(hyp: str, ref: str, char_order: int = 6,
                     remove_whitespace: bool = True) -> List[Tuple[int, int, int]]:
    """Per-order ``(matched, hyp_total, ref_total)`` character n-gram counts."""
    if remove_whitespace:
        hyp = _WS.sub("", hyp)
        ref = _WS.sub("", ref)
    stats = []
    for n in range(1, char_order + 1):
        h = _char_ngrams(hyp, n)
        r = _char_ngrams(ref, n)
        matched = sum((h & r).values())
        stats.append((matched, sum(h.values()), sum(r.values())))
    return stats


def _precision_recall(stats: Sequence[Tuple[int, int, int]]) -> Tuple[float, float]:
    # An order empty on both sides carries no evidence and is skipped; an
    # order empty on one side only contributes 0 to that side's average.
    precision = recall = 0.0
    orders = 0
    for matched, hyp_total, ref_total in stats:
        if hyp_total == 0 and ref_total == 0:
            continue
        orders += 1
        if hyp_total:
            precision += matched / hyp_total
        if ref_total:
            recall += matched / ref_total
    if orders == 0:
        return 0.0, 0.0
    return precision / orders, recall / orders


def _f_beta(precision: float, recall: float, beta: float) -> float:
    if precision + recall == 0:
        return 0.0
    b2 = beta ** 2
    return (1 + b2) * precision * recall / (b2 * precision + recall)


def chrf_from_stats(stats: Sequence[Tuple[int, int, int]], beta: float = 2.0) -> Tuple[float, float, float]:
    """Return ``(score, precision, recall)`` with the score on a 0-100 scale."""
    precision, recall = _precision_recall(stats)
    return 100.0 * _f_beta(precision, recall, beta), precision, recall


def corpus_chrf(hyps: Sequence[str], ref_streams: Sequence[Sequence[str]], char_order: int = 6,
                beta: float = 2.0, remove_whitespace: bool = True, *,
                langpair: Optional[str] = None, test_set: Optional[str] = None) -> ChrfResult:
    """Corpus-level chrF.

    Counts are summed over the corpus before precision and recall are taken.
    With several references, each segment uses the reference that gives it
    the highest segment-level chrF.
    """
    if char_order < 1:
        raise ValueError("char_order must be at least 1")
    if not beta > 0:
        raise ValueError("beta must be positive")
    hyps = list(hyps)
    ref_streams = [list(r) for r in ref_streams]
    if not hyps:
        raise EmptyHypothesisError("hypothesis corpus is empty")
    if not ref_streams:
        raise EmptyReferenceError("at least one reference stream is required")
    for i, refs in enumerate(ref_streams):
        if len(refs) != len(hyps):
            raise LengthMismatchError(
                f"reference stream {i} has {len(refs)} lines but the hypothesis has {len(hyps)}")

    totals = [[0, 0, 0] for _ in range(char_order)]
    for i, hyp in enumerate(hyps):
        candidates = [char_ngram_stats(hyp, stream[i], char_order, remove_whitespace)
                      for stream in ref_streams]
        best = max(candidates, key=lambda s: chrf_from_stats(s, beta)[0])
        for acc, order_stats in zip(totals, best):
            for j in range(3):
                acc[j] += order_stats[j]

    score, precision, recall = chrf_from_stats([tuple(t) for t in totals], beta)
    signature = chrf_signature(char_order, beta, remove_whitespace, len(ref_streams),
                               langpair, test_set)
    return ChrfResult(score, char_order, float(beta), precision, recall, signature)
