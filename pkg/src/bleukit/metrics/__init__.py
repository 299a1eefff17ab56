"""BLEU and chrF scoring."""

from .bleu import (
    BleuParams,
    BleuResult,
    CorpusStats,
    RefLenPolicy,
    Smoothing,
    aggregate,
    brevity_penalty,
    compute_bleu,
    corpus_bleu,
    corpus_stats,
    extract_ngrams,
    segment_stats,
    smooth_precisions,
)
from .chrf import ChrfResult, char_ngram_stats, corpus_chrf

__all__ = [
    "BleuParams", "BleuResult", "CorpusStats", "RefLenPolicy", "Smoothing",
    "aggregate", "brevity_penalty", "compute_bleu", "corpus_bleu", "corpus_stats",
    "extract_ngrams", "segment_stats", "smooth_precisions",
    "ChrfResult", "char_ngram_stats", "corpus_chrf",
]
