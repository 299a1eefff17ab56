"""Metric-internal tokenization.

The ``13a`` scheme reproduces the language-independent normalization and
tokenization of the WMT scoring script ``mteval-v13a.pl``.  Rules are applied
in a fixed order; changing the order changes scores.
"""

import enum
import re
from typing import Callable, List

__all__ = [
    "TokenizerKind",
    "normalize_v13a",
    "tokenize_13a",
    "tokenize_none",
    "fold_case",
    "get_tokenizer",
]


class TokenizerKind(str, enum.Enum):
    THIRTEEN_A = "13a"
    NONE = "none"

    def __str__(self):
        return self.value


_SGML_ENTITIES = (
    ("&quot;", '"'),
    ("&amp;", "&"),
    ("&lt;", "<"),
    ("&gt;", ">"),
)

# Order matters; see tokenize_13a.
_13A_RULES = [
    # {-~  [-`  space-&  (-+  :-@  and /
    (re.compile(r"([\{-\~\[-\` -\&\(-\+\:-\@\/])"), r" \1 "),
    (re.compile(r"([^0-9])([\.,])"), r"\1 \2 "),
    (re.compile(r"([\.,])([^0-9])"), r" \1 \2"),
    (re.compile(r"([0-9])(-)"), r"\1 \2 "),
]
_WHITESPACE = re.compile(r"\s+")


def normalize_v13a(text: str) -> str:
    """Apply the language-independent rewrites of mteval-v13a.

    Removes ``<skipped>`` markers, joins hyphenated line breaks, turns the
    remaining newlines into spaces and unescapes four SGML entities.
    """
    text = text.replace("<skipped>", "")
    text = text.replace("-\n", "")
    text = text.replace("\n", " ")
    for entity, char in _SGML_ENTITIES:
        text = text.replace(entity, char)
    return text


def tokenize_13a(text: str) -> List[str]:
    """Tokenize a raw segment the way the WMT official scorer does.

    Only ASCII punctuation is split off.  Text without spaces, such as
    Chinese or Japanese, stays one token per whitespace run, so 13a scores
    on such text measure overlap of those runs.

    >>> tokenize_13a("Hello, World!")
    ['Hello', ',', 'World', '!']
    >>> tokenize_13a("1,000.5 points")
    ['1,000.5', 'points']
    """
    norm = " " + normalize_v13a(text) + " "
    for pattern, repl in _13A_RULES:
        norm = pattern.sub(repl, norm)
    return _WHITESPACE.sub(" ", norm).split()


def tokenize_none(text: str) -> List[str]:
    return text.split()


def fold_case(text: str) -> str:
    # str.lower applies the full Unicode mapping (e.g. "İ" -> "i̇").
    return text.lower()


_TOKENIZERS = {
    TokenizerKind.THIRTEEN_A: tokenize_13a,
    TokenizerKind.NONE: tokenize_none,
}


def get_tokenizer(kind) -> Callable[[str], List[str]]:
    """Return the tokenizer function for ``kind`` (a TokenizerKind or its name)."""
    try:
        return _TOKENIZERS[TokenizerKind(kind)]
    except ValueError:
        names = ", ".join(k.value for k in TokenizerKind)
        raise ValueError(f"unknown tokenizer {kind!r}; choose from {names}") from None
