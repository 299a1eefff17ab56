"""Download, verify, extract and serve test sets from a local cache.

Layout under the cache root::

    <root>/<test-set>/raw/<i>-<archive basename>     verified downloads
    <root>/<test-set>/<langpair>.<role>.txt          one segment per line
    <root>/<test-set>/.complete-<langpair>           written last
    <root>/<test-set>/.lock                          serializes fetches

Roles are ``src``, ``ref0``, ``ref1``, ...
"""

import dataclasses
import hashlib
import logging
import os
import shutil
import tarfile
import tempfile
import urllib.error
import urllib.request
import zipfile
from pathlib import Path
from typing import Dict, List, Optional, Union

from filelock import FileLock

from ..errors import ChecksumError, DownloadError, ReferenceIndexError, SegmentCountError
from .registry import Registry, TestSetView, default_registry
from .sgml import extract_segments

__all__ = ["CACHE_ENV", "CacheLayout", "default_cache_root", "fetch", "get_side", "get_references"]

logger = logging.getLogger(__name__)

CACHE_ENV = "BLEUKIT_CACHE"
_CHUNK = 1 << 16


def default_cache_root() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env).expanduser()
    data_home = os.environ.get("XDG_DATA_HOME") or os.path.join(os.path.expanduser("~"), ".local", "share")
    return Path(data_home) / "bleukit"


@dataclasses.dataclass(frozen=True)
class CacheLayout:
    root: Path = dataclasses.field(default_factory=default_cache_root)

    def __post_init__(self):
        object.__setattr__(self, "root", Path(self.root).expanduser())

    def test_set_dir(self, name: str) -> Path:
        return self.root.joinpath(*name.split("/"))

    def raw_dir(self, name: str) -> Path:
        return self.test_set_dir(name) / "raw"

    def text_path(self, name: str, langpair: str, role: str) -> Path:
        return self.test_set_dir(name) / f"{langpair}.{role}.txt"

    def marker(self, name: str, langpair: str) -> Path:
        return self.test_set_dir(name) / f".complete-{langpair}"

    def lock_path(self, name: str) -> Path:
        return self.test_set_dir(name) / ".lock"


def _as_layout(cache) -> CacheLayout:
    if cache is None:
        return CacheLayout()
    if isinstance(cache, CacheLayout):
        return cache
    return CacheLayout(Path(cache))


def _file_digest(path: Path, algorithm: str) -> str:
    h = hashlib.new(algorithm)
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(_CHUNK), b""):
            h.update(block)
    return h.hexdigest()


def _download(url: str, dest: Path, checksum: str) -> None:
    algorithm, expected = checksum.split(":", 1)
    dest.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=dest.parent, prefix=".download-")
    try:
        logger.info("downloading %s", url)
        try:
            with os.fdopen(fd, "wb") as out, urllib.request.urlopen(url, timeout=60) as resp:
                shutil.copyfileobj(resp, out, _CHUNK)
        except (urllib.error.URLError, OSError) as exc:
            raise DownloadError(f"failed to download {url}: {exc}") from exc
        actual = _file_digest(Path(tmp), algorithm)
        if actual != expected:
            raise ChecksumError(
                f"checksum mismatch for {url}: expected {algorithm}:{expected}, got {algorithm}:{actual}; "
                "the corrupt download was removed")
        os.replace(tmp, dest)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)


def _read_member(archive: Path, url: str, member: str) -> Optional[bytes]:
    """Bytes of ``member`` inside ``archive``, or None if it is not there."""
    if tarfile.is_tarfile(archive):
        with tarfile.open(archive) as tar:
            try:
                info = tar.getmember(member)
            except KeyError:
                return None
            fh = tar.extractfile(info)
            return fh.read() if fh is not None else None
    if zipfile.is_zipfile(archive):
        with zipfile.ZipFile(archive) as zf:
            try:
                return zf.read(member)
            except KeyError:
                return None
    if member == url.rstrip("/").rsplit("/", 1)[-1]:
        return archive.read_bytes()
    return None


def _to_lines(member: str, data: bytes) -> List[str]:
    # Strict decoding: never alter references silently.
    text = data.decode("utf-8")
    if text.startswith("\ufeff"):
        text = text[1:]
    lower = member.lower()
    if lower.endswith((".sgm", ".sgml", ".xml")):
        return extract_segments(text)
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [line.rstrip("\r") for line in lines]


def _write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.chmod(tmp, 0o444)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)


def _paths(layout: CacheLayout, view: TestSetView) -> Dict[str, Path]:
    return {role: layout.text_path(view.name, view.langpair, role) for role in view.files.roles}


def _is_complete(layout: CacheLayout, view: TestSetView) -> bool:
    return layout.marker(view.name, view.langpair).exists() and all(
        p.exists() for p in _paths(layout, view).values())


def fetch(view: TestSetView, cache: Union[CacheLayout, str, os.PathLike, None] = None) -> Dict[str, Path]:
    """Make sure one language pair of a test set is extracted in the cache.

    Returns a mapping from role (``src``, ``ref0``, ...) to the extracted
    plain-text file.  A warm cache is served without any network access.
    """
    layout = _as_layout(cache)
    paths = _paths(layout, view)
    if _is_complete(layout, view):
        return paths

    descriptor = view.descriptor
    directory = layout.test_set_dir(view.name)
    directory.mkdir(parents=True, exist_ok=True)
    with FileLock(str(layout.lock_path(view.name)), timeout=600):
        if _is_complete(layout, view):
            return paths

        archives = []
        for i, (url, checksum) in enumerate(zip(descriptor.urls, descriptor.checksums)):
            dest = layout.raw_dir(view.name) / f"{i}-{url.rstrip('/').rsplit('/', 1)[-1]}"
            if not dest.exists():
                _download(url, dest, checksum)
            archives.append((url, dest))

        streams: Dict[str, List[str]] = {}
        for role, member in zip(view.files.roles, view.files.members):
            for url, archive in archives:
                data = _read_member(archive, url, member)
                if data is not None:
                    break
            else:
                raise DownloadError(f"{view.name}/{view.langpair}: {member} not found in the downloaded archives")
            streams[role] = _to_lines(member, data)

        counts = {role: len(lines) for role, lines in streams.items()}
        expected = view.segment_count
        if len(set(counts.values())) != 1 or (expected is not None and counts["src"] != expected):
            raise SegmentCountError(
                f"{view.name}/{view.langpair}: extracted segment counts {counts} "
                f"do not match the expected {expected if expected is not None else 'equal counts'}")

        for role, lines in streams.items():
            _write_atomic(paths[role], "".join(line + "\n" for line in lines))
        _write_atomic(layout.marker(view.name, view.langpair), f"{counts['src']}\n")
    return paths


def _read_lines(path: Path) -> List[str]:
    with open(path, encoding="utf-8", newline="") as fh:
        text = fh.read()
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    return lines


def get_side(name: str, langpair: str, side: str = "src", ref_index: int = 0,
             cache=None, registry: Optional[Registry] = None) -> List[str]:
    """Raw lines of the source (``side="src"``) or one reference (``side="ref"``).

    Lines are returned exactly as extracted: neither tokenized nor otherwise
    normalized.
    """
    view = (registry or default_registry()).resolve(name, langpair)
    if side == "src":
        role = "src"
    elif side == "ref":
        if not 0 <= ref_index < view.num_refs:
            raise ReferenceIndexError(
                f"{name}/{langpair} has {view.num_refs} reference(s) "
                f"(indices 0..{view.num_refs - 1}); got index {ref_index}")
        role = f"ref{ref_index}"
    else:
        raise ValueError(f"side must be 'src' or 'ref', got {side!r}")
    return _read_lines(fetch(view, cache)[role])


def get_references(name: str, langpair: str, cache=None,
                   registry: Optional[Registry] = None) -> List[List[str]]:
    """Every reference stream of a test set, in registry order."""
    view = (registry or default_registry()).resolve(name, langpair)
    paths = fetch(view, cache)
    return [_read_lines(paths[f"ref{i}"]) for i in range(view.num_refs)]
