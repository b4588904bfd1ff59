"""
store/files.py
~~~~~~~~~~~~~~
File output for every artifact the CLI produces.

Writes go to a temporary file in the target directory and are moved into
place with os.replace, so readers see either the old file or the whole
new one.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from config import logger
from services.checks import Report
from store.documents import SpectrumDocument, json_text
from utils.errors import SchemaMismatch


def write_atomic(path: str | os.PathLike, text: str) -> Path:
    target = Path(path)
    directory = target.resolve().parent
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.debug("Wrote %d characters to %s", len(text), target)
    return target


def read_text(path: str | os.PathLike) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_document(path: str | os.PathLike) -> SpectrumDocument:
    try:
        text = read_text(path)
    except UnicodeDecodeError as exc:
        raise SchemaMismatch(f"{path} is not UTF-8 text") from exc
    return SpectrumDocument.from_json(text)


def save_document(path: str | os.PathLike, doc: SpectrumDocument, fmt: str = "json") -> Path:
    return write_atomic(path, doc.render(fmt))


def report_json(reports: list[Report]) -> str:
    body = {"passed": all(r.passed for r in reports), "suites": [r.to_dict() for r in reports]}
    return json_text(body) + "\n"


def save_reports(path: str | os.PathLike, reports: list[Report]) -> Path:
    return write_atomic(path, report_json(reports))
