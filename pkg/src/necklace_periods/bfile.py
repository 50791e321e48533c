"""Reader for OEIS-style b-files: one ``index value`` pair per line.

Blank lines and lines starting with ``#`` are skipped. Indices must strictly
increase and values must be nonnegative integers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DomainError


class BFileError(DomainError):
    def __init__(self, source: str, lineno: int, message: str):
        self.source = source
        self.lineno = lineno
        super().__init__(f"{source}, line {lineno}: {message}")


@dataclass
class BFile:
    sequence_id: str
    entries: list[tuple[int, int]] = field(default_factory=list)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def sequence_id_from_name(name: str) -> str:
    m = re.search(r"[bA](\d{6})", Path(name).name)
    return f"A{m.group(1)}" if m else Path(name).stem


def parse_bfile(text: str, sequence_id: str = "", source: str = "<b-file>") -> BFile:
    entries: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(source, lineno, f"expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(source, lineno, f"non-integer field in {raw!r}") from None
        if value < 0:
            raise BFileError(source, lineno, f"negative value {value}")
        if entries and index <= entries[-1][0]:
            raise BFileError(source, lineno, f"index {index} does not increase")
        entries.append((index, value))
    return BFile(sequence_id, entries)


def read_bfile(path: str | Path) -> BFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise DomainError(f"cannot read b-file {path}: {exc}") from None
    return parse_bfile(text, sequence_id_from_name(path.name), str(path))
