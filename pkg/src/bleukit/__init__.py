"""Reproducible corpus-level BLEU and chrF with metric-internal tokenization."""

__version__ = "0.1.0"

from .metrics import BleuParams, BleuResult, ChrfResult, CorpusStats, corpus_bleu, corpus_chrf
from .signature import Signature, build_signature, parse_signature
from .tokenizers import TokenizerKind, tokenize_13a

__all__ = [
    "__version__",
    "BleuParams", "BleuResult", "ChrfResult", "CorpusStats", "corpus_bleu", "corpus_chrf",
    "Signature", "build_signature", "parse_signature",
    "TokenizerKind", "tokenize_13a",
]
