"""Official test sets: registry, download cache and segment extraction."""

from .cache import CACHE_ENV, CacheLayout, default_cache_root, fetch, get_references, get_side
from .registry import (
    LangPairFiles,
    Registry,
    TestSetDescriptor,
    TestSetView,
    default_registry,
    list_test_sets,
    resolve_test_set,
)
from .sgml import extract_segments

__all__ = [
    "CACHE_ENV", "CacheLayout", "default_cache_root", "fetch", "get_references", "get_side",
    "LangPairFiles", "Registry", "TestSetDescriptor", "TestSetView",
    "default_registry", "list_test_sets", "resolve_test_set", "extract_segments",
]
