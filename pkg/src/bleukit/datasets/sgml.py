"""Segment extraction from WMT-style SGML (and IWSLT XML) test-set files."""

import re
from typing import List

from ..errors import MalformedSGMLError

__all__ = ["extract_segments"]

# Pattern-based on purpose: WMT SGML is frequently not well-formed markup.
_SEG = re.compile(r"<seg\b[^>]*>(.*?)</seg\s*>", re.DOTALL | re.IGNORECASE)
_NEWLINE_RUN = re.compile(r"\s*\n\s*")


def extract_segments(sgml_text: str) -> List[str]:
    """Return the text of every ``<seg>`` element, in file order.

    Entity references are left untouched (the 13a tokenizer resolves them at
    scoring time).  Surrounding whitespace is trimmed and a segment wrapped
    over several lines is joined with single spaces.

    >>> extract_segments('<doc docid="d"><seg id="1">A</seg><seg id="2">B</seg></doc>')
    ['A', 'B']
    """
    segments = [_NEWLINE_RUN.sub(" ", m.group(1).strip()) for m in _SEG.finditer(sgml_text)]
    if not segments:
        raise MalformedSGMLError("no <seg> elements found")
    return segments
