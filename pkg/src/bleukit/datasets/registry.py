"""The test-set registry: what exists, where to get it, what to expect.

User registry files use INI syntax, one section per test set::

    [mytest/v1]
    url = https://example.org/mytest.tgz
    checksum = sha256:0f3a...
    description = In-house news test set
    citation = Internal, 2018
    pair.en-de = mytest/src.en.sgm mytest/ref.de.sgm mytest/ref2.de.sgm
    count.en-de = 1500

``url`` and ``checksum`` take whitespace-separated lists of equal length
(one checksum per archive, written ``md5:<hex>`` or ``sha256:<hex>``).
``pair.<src>-<tgt>`` lists archive members: the source first, then one or
more references.  An archive member that is not a tar or zip file is
addressed by the last path component of its URL.  ``count.<pair>`` is
optional.
"""

import configparser
import dataclasses
import os
import re
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from ..errors import RegistryFormatError, UnknownLangPairError, UnknownTestSetError
from ._builtin import BUILTIN

__all__ = [
    "LangPairFiles",
    "TestSetDescriptor",
    "TestSetView",
    "Registry",
    "default_registry",
    "resolve_test_set",
    "list_test_sets",
]

_LANGPAIR = re.compile(r"[a-z]{2,3}(_[A-Za-z]+)?-[a-z]{2,3}(_[A-Za-z]+)?")
_CHECKSUM = re.compile(r"(md5|sha1|sha256):[0-9a-f]+")
_ALLOWED_SCHEMES = ("https://", "file://")


@dataclasses.dataclass(frozen=True)
class LangPairFiles:
    source: str
    references: Tuple[str, ...]
    segment_count: Optional[int] = None

    @property
    def roles(self) -> Tuple[str, ...]:
        return ("src",) + tuple(f"ref{i}" for i in range(len(self.references)))

    @property
    def members(self) -> Tuple[str, ...]:
        return (self.source,) + self.references


@dataclasses.dataclass(frozen=True)
class TestSetDescriptor:
    name: str
    urls: Tuple[str, ...]
    checksums: Tuple[str, ...]
    langpairs: Mapping[str, LangPairFiles]
    description: str = ""
    citation: str = ""

    # Not a test class, despite the name.
    __test__ = False

    def __post_init__(self):
        if not self.name or "+" in self.name or any(c.isspace() for c in self.name):
            raise RegistryFormatError(f"invalid test set name {self.name!r}")
        if not self.urls:
            raise RegistryFormatError(f"{self.name}: no download URL")
        if len(self.urls) != len(self.checksums):
            raise RegistryFormatError(f"{self.name}: need exactly one checksum per URL")
        for url in self.urls:
            if not url.startswith(_ALLOWED_SCHEMES):
                raise RegistryFormatError(f"{self.name}: only https:// and file:// URLs are allowed: {url}")
        for checksum in self.checksums:
            if not _CHECKSUM.fullmatch(checksum):
                raise RegistryFormatError(f"{self.name}: malformed checksum {checksum!r}")
        if not self.langpairs:
            raise RegistryFormatError(f"{self.name}: no language pairs")
        for pair, files in self.langpairs.items():
            if not _LANGPAIR.fullmatch(pair):
                raise RegistryFormatError(f"{self.name}: malformed language pair {pair!r}")
            if not files.references:
                raise RegistryFormatError(f"{self.name}/{pair}: needs at least one reference")
            if files.segment_count is not None and files.segment_count <= 0:
                raise RegistryFormatError(f"{self.name}/{pair}: segment count must be positive")
        object.__setattr__(self, "langpairs", MappingProxyType(dict(self.langpairs)))

    def view(self, langpair: str) -> "TestSetView":
        try:
            files = self.langpairs[langpair]
        except KeyError:
            pairs = ", ".join(sorted(self.langpairs))
            raise UnknownLangPairError(
                f"test set {self.name!r} has no language pair {langpair!r}; available: {pairs}") from None
        return TestSetView(self, langpair, files)


@dataclasses.dataclass(frozen=True)
class TestSetView:
    """One language pair of a test set."""

    descriptor: TestSetDescriptor
    langpair: str
    files: LangPairFiles

    __test__ = False

    @property
    def name(self) -> str:
        return self.descriptor.name

    @property
    def segment_count(self) -> Optional[int]:
        return self.files.segment_count

    @property
    def num_refs(self) -> int:
        return len(self.files.references)


def _descriptor_from_dict(entry: dict) -> TestSetDescriptor:
    counts = entry.get("counts", {})
    pairs = {
        pair: LangPairFiles(members[0], tuple(members[1:]), counts.get(pair))
        for pair, members in entry["pairs"].items()
    }
    return TestSetDescriptor(
        name=entry["name"],
        urls=tuple(entry["urls"]),
        checksums=tuple(entry["checksums"]),
        langpairs=pairs,
        description=entry.get("description", ""),
        citation=entry.get("citation", ""),
    )


def _parse_registry_file(path) -> List[TestSetDescriptor]:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except configparser.Error as exc:
        raise RegistryFormatError(f"{path}: {exc}") from None
    descriptors = []
    for name in parser.sections():
        section = parser[name]
        pairs: Dict[str, List[str]] = {}
        counts: Dict[str, int] = {}
        for key, value in section.items():
            if key.startswith("pair."):
                members = value.split()
                if len(members) < 2:
                    raise RegistryFormatError(f"{path} [{name}] {key}: need a source and a reference")
                pairs[key[len("pair."):]] = members
            elif key.startswith("count."):
                try:
                    counts[key[len("count."):]] = int(value)
                except ValueError:
                    raise RegistryFormatError(f"{path} [{name}] {key}: not an integer") from None
            elif key not in ("url", "checksum", "description", "citation"):
                raise RegistryFormatError(f"{path} [{name}]: unknown field {key!r}")
        stray = set(counts) - set(pairs)
        if stray:
            raise RegistryFormatError(f"{path} [{name}]: count for undefined pair(s) {sorted(stray)}")
        for required in ("url", "checksum"):
            if required not in section:
                raise RegistryFormatError(f"{path} [{name}]: missing {required!r}")
        descriptors.append(_descriptor_from_dict({
            "name": name,
            "urls": section["url"].split(),
            "checksums": section["checksum"].split(),
            "description": section.get("description", ""),
            "citation": section.get("citation", ""),
            "pairs": pairs,
            "counts": counts,
        }))
    return descriptors


class Registry:
    """Immutable, ordered collection of test-set descriptors."""

    def __init__(self, descriptors: Iterable[TestSetDescriptor]):
        entries: Dict[str, TestSetDescriptor] = {}
        for d in descriptors:
            entries[d.name] = d
        self._entries = MappingProxyType(entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __iter__(self):
        return iter(self._entries.values())

    def __len__(self):
        return len(self._entries)

    def names(self) -> List[str]:
        return list(self._entries)

    def get(self, name: str) -> TestSetDescriptor:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownTestSetError(
                f"unknown test set {name!r}; available: {', '.join(self._entries)}") from None

    def resolve(self, name: str, langpair: str) -> TestSetView:
        return self.get(name).view(langpair)

    def extended(self, path) -> "Registry":
        """A new registry with the entries of a user registry file added.

        User entries replace built-in entries of the same name.
        """
        return Registry(list(self) + _parse_registry_file(os.fspath(path)))

    def list(self) -> List[Tuple[str, Tuple[str, ...], str]]:
        return [(d.name, tuple(d.langpairs), d.citation) for d in self]


_DEFAULT: Optional[Registry] = None


def default_registry() -> Registry:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = Registry(_descriptor_from_dict(entry) for entry in BUILTIN)
    return _DEFAULT


def resolve_test_set(name: str, langpair: str, registry: Optional[Registry] = None) -> TestSetView:
    return (registry or default_registry()).resolve(name, langpair)


def list_test_sets(registry: Optional[Registry] = None) -> List[Tuple[str, Tuple[str, ...], str]]:
    """``(name, langpairs, citation)`` for every registered test set, in registry order."""
    return (registry or default_registry()).list()
