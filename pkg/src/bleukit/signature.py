"""Version signatures that record every parameter affecting a score.

A signature is a ``+``-delimited list of ``KEY.VALUE`` entries prefixed by the
metric name, e.g.::

    BLEU+c.mixed+l.en-de+#.1+s.exp+t.wmt14+tok.13a+v.1.2.10

Each entry has a short key (shown above) and a long key
(``case``, ``lang``, ``numrefs``, ...).  Entries are split at the first ``.``
only, so values such as version numbers may contain dots.
"""

import dataclasses
import re
from typing import Dict, List, NamedTuple, Optional

from .errors import SignatureError

__all__ = ["Signature", "build_signature", "parse_signature", "bleu_signature", "chrf_signature"]


class _Key(NamedTuple):
    field: str
    short: str
    long: str
    required: bool


# Rendering order is the order of these tuples.
_SCHEMAS: Dict[str, List[_Key]] = {
    "BLEU": [
        _Key("case", "c", "case", True),
        _Key("lang", "l", "lang", False),
        _Key("numrefs", "#", "numrefs", True),
        _Key("reflen", "r", "reflen", False),
        _Key("order", "n", "order", False),
        _Key("smooth", "s", "smooth", True),
        _Key("test", "t", "test", False),
        _Key("tok", "tok", "tok", True),
        _Key("version", "v", "version", True),
    ],
    "chrF": [
        _Key("lang", "l", "lang", False),
        _Key("numrefs", "#", "numrefs", True),
        _Key("order", "o", "order", True),
        _Key("beta", "b", "beta", True),
        _Key("space", "sp", "space", True),
        _Key("test", "t", "test", False),
        _Key("version", "v", "version", True),
    ],
}

_VALID = {
    "case": re.compile(r"mixed|lc"),
    "lang": re.compile(r"[A-Za-z0-9_]+-[A-Za-z0-9_]+"),
    "numrefs": re.compile(r"[1-9][0-9]*"),
    "reflen": re.compile(r"closest|shortest"),
    "order": re.compile(r"[1-9][0-9]*"),
    "smooth": re.compile(r"exp|none|floor_[0-9][0-9.e+-]*"),
    "test": re.compile(r"[^+\s]+"),
    "tok": re.compile(r"13a|none"),
    "version": re.compile(r"[0-9]+(\.[0-9]+)*([A-Za-z0-9.+-]*)?"),
    "beta": re.compile(r"[0-9]+(\.[0-9]+)?"),
    "space": re.compile(r"yes|no"),
}

_INT_FIELDS = {"numrefs", "order"}


@dataclasses.dataclass(frozen=True)
class Signature:
    """Parsed form of a signature string.

    Fields that do not apply to ``metric`` stay ``None``.  Integer-valued
    entries (``numrefs``, ``order``) are stored as ints, everything else as the
    exact string that is rendered.
    """

    metric: str = "BLEU"
    case: Optional[str] = None
    lang: Optional[str] = None
    numrefs: Optional[int] = None
    reflen: Optional[str] = None
    order: Optional[int] = None
    smooth: Optional[str] = None
    test: Optional[str] = None
    tok: Optional[str] = None
    beta: Optional[str] = None
    space: Optional[str] = None
    version: Optional[str] = None

    def __post_init__(self):
        if self.metric not in _SCHEMAS:
            raise SignatureError(f"unknown metric {self.metric!r}")
        allowed = {k.field for k in _SCHEMAS[self.metric]}
        for field in _VALID:
            value = getattr(self, field)
            if value is None:
                continue
            if field not in allowed:
                raise SignatureError(f"{field!r} is not a {self.metric} signature entry")
            if not _VALID[field].fullmatch(str(value)):
                raise SignatureError(f"invalid value for {field!r}: {value!r}")
        missing = [k.long for k in _SCHEMAS[self.metric] if k.required and getattr(self, k.field) is None]
        if missing:
            raise SignatureError(f"missing required keys: {', '.join(missing)}")

    def render(self, short: bool = False) -> str:
        parts = [self.metric]
        for key in _SCHEMAS[self.metric]:
            value = getattr(self, key.field)
            if value is not None:
                parts.append(f"{key.short if short else key.long}.{value}")
        return "+".join(parts)

    def __str__(self):
        return self.render()


def parse_signature(text: str) -> Signature:
    """Parse a short or long signature string back into a :class:`Signature`."""
    if not text or text != text.strip():
        raise SignatureError(f"malformed signature: {text!r}")
    metric, *entries = text.split("+")
    if metric not in _SCHEMAS:
        raise SignatureError(f"unknown metric {metric!r} in signature")
    by_key = {}
    for key in _SCHEMAS[metric]:
        by_key[key.short] = key
        by_key[key.long] = key
    values = {}
    for entry in entries:
        name, sep, value = entry.partition(".")
        if not sep or not name or not value:
            raise SignatureError(f"malformed signature entry {entry!r}")
        if name not in by_key:
            raise SignatureError(f"unknown signature key {name!r}")
        field = by_key[name].field
        if field in values:
            raise SignatureError(f"duplicate signature key {name!r}")
        if field in _INT_FIELDS:
            if not _VALID[field].fullmatch(value):
                raise SignatureError(f"invalid value for {name!r}: {value!r}")
            value = int(value)
        values[field] = value
    return Signature(metric=metric, **values)


def _format_real(value: float) -> str:
    value = float(value)
    return str(int(value)) if value.is_integer() else repr(value)


def bleu_signature(params, numrefs: int, langpair: Optional[str] = None,
                   test_set: Optional[str] = None, version: Optional[str] = None) -> Signature:
    """Signature for a BLEU computation with ``params`` (a BleuParams).

    The reference-length policy is recorded whenever it can matter (more than
    one reference) or differs from the default; the n-gram order only when it
    is not 4.
    """
    from . import __version__
    from .metrics.bleu import RefLenPolicy, Smoothing

    smoothing = Smoothing(params.smoothing)
    smooth = smoothing.value
    if smoothing is Smoothing.FLOOR:
        smooth = f"floor_{_format_real(params.floor_value)}"
    policy = RefLenPolicy(params.ref_len_policy)
    reflen = policy.value if numrefs > 1 or policy is not RefLenPolicy.CLOSEST else None
    return Signature(
        metric="BLEU",
        case="lc" if params.lowercase else "mixed",
        lang=langpair,
        numrefs=numrefs,
        reflen=reflen,
        order=params.max_order if params.max_order != 4 else None,
        smooth=smooth,
        test=test_set,
        tok=str(params.tokenizer),
        version=version or __version__,
    )


def chrf_signature(char_order: int, beta: float, remove_whitespace: bool, numrefs: int,
                   langpair: Optional[str] = None, test_set: Optional[str] = None,
                   version: Optional[str] = None) -> Signature:
    from . import __version__

    return Signature(
        metric="chrF",
        lang=langpair,
        numrefs=numrefs,
        order=char_order,
        beta=_format_real(beta),
        space="no" if remove_whitespace else "yes",
        test=test_set,
        version=version or __version__,
    )


def build_signature(params, numrefs: int, langpair: Optional[str] = None,
                    test_set: Optional[str] = None, version: Optional[str] = None,
                    short: bool = False) -> str:
    """Render the BLEU signature string for ``params`` and scoring context."""
    if numrefs < 1:
        raise SignatureError("numrefs must be at least 1")
    return bleu_signature(params, numrefs, langpair, test_set, version).render(short=short)
