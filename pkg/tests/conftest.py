import hashlib
import socket
import sys
import tarfile
from pathlib import Path

import pytest

from bleukit.datasets import CacheLayout, default_registry

TESTS = Path(__file__).parent
FIXTURES = TESTS / "fixtures"
MINI = FIXTURES / "mini"

sys.path.insert(0, str(TESTS))


@pytest.fixture(autouse=True)
def _no_network(request, monkeypatch):
    """Offline tests must never open a network connection."""
    if request.node.get_closest_marker("network"):
        return

    def refuse(*args, **kwargs):
        raise OSError("network access attempted in an offline test")

    monkeypatch.setattr(socket.socket, "connect", refuse)
    monkeypatch.setattr(socket, "create_connection", refuse)


def sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_registry(path: Path, archive: Path, checksum: str, extra: str = "") -> Path:
    path.write_text(
        "[mini]\n"
        f"url = {archive.as_uri()}\n"
        f"checksum = sha256:{checksum}\n"
        "description = Three-segment test set built from committed SGML fixtures\n"
        "citation = bleukit test fixtures\n"
        "pair.en-de = mini/newstest-mini-src.en.sgm mini/newstest-mini-ref.de.sgm mini/newstestB-mini-ref.de.sgm\n"
        "count.en-de = 3\n"
        "pair.en-xx = mini/newstest-mini-src.en.sgm mini/newstest-mini-short-ref.de.sgm\n"
        + extra,
        encoding="utf-8",
    )
    return path


@pytest.fixture
def mini_archive(tmp_path) -> Path:
    archive = tmp_path / "mini.tgz"
    with tarfile.open(archive, "w:gz") as tar:
        for sgm in sorted(MINI.glob("*.sgm")):
            tar.add(sgm, arcname=f"mini/{sgm.name}")
    return archive


@pytest.fixture
def mini_registry(tmp_path, mini_archive):
    path = write_registry(tmp_path / "registry.ini", mini_archive, sha256(mini_archive))
    return default_registry().extended(path)


@pytest.fixture
def cache(tmp_path) -> CacheLayout:
    return CacheLayout(tmp_path / "cache")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report = outcome.get_result()
        report.user_properties.append(("criterion", (marker.args[0], marker.args[1])))


def pytest_terminal_summary(terminalreporter):
    """One line per criterion: FAIL if any case failed, SKIP if all skipped."""
    results = {}
    for outcome in ("passed", "failed", "skipped"):
        for report in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(report, "user_properties", []))
            if "criterion" not in props or (report.when != "call" and outcome == "passed"):
                continue
            number, title = props["criterion"]
            entry = results.setdefault(number, {"title": title, "outcomes": [], "reasons": set()})
            entry["outcomes"].append(outcome)
            if outcome == "skipped" and isinstance(report.longrepr, tuple):
                entry["reasons"].add(report.longrepr[2])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        entry = results[number]
        outcomes = entry["outcomes"]
        if "failed" in outcomes:
            status = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            status = "SKIP"
        else:
            status = "PASS"
        detail = f" ({'; '.join(sorted(entry['reasons']))})" if status == "SKIP" else ""
        terminalreporter.write_line(f"[{status}] criterion {number}: {entry['title']}{detail}")
