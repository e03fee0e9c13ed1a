"""OEIS b-file parsing and verification of engine output against it."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import List, Optional, Tuple

from .engine import series
from .steps import StepSet

#: Environment variable naming a directory of user-supplied full b-files.
BFILE_DIR_ENV = "STAIRS_BFILE_DIR"


class BFileError(ValueError):
    def __init__(self, message, line=None, source=""):
        self.line = line
        where = f"{source}:{line}: " if line is not None else ""
        super().__init__(where + message)


@dataclass
class BFile:
    entries: List[Tuple[int, int]]
    source_name: str = ""

    def as_dict(self):
        return dict(self.entries)

    @property
    def indices(self):
        return [i for i, _ in self.entries]

    def __len__(self):
        return len(self.entries)


def parse_bfile(text: str, source_name: str = "") -> BFile:
    """Parse ``index value`` lines; ``#`` comments and blank lines are skipped."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"expected 'index value', got {raw!r}", lineno, source_name)
        try:
            idx, val = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"non-integer field in {raw!r}", lineno, source_name) from None
        if entries and idx <= entries[-1][0]:
            raise BFileError(f"index {idx} does not increase (previous {entries[-1][0]})",
                             lineno, source_name)
        entries.append((idx, val))
    return BFile(entries, source_name)


def read_bfile(path) -> BFile:
    path = Path(path)
    return parse_bfile(path.read_text(), path.name)


@dataclass
class VerificationReport:
    checked: int = 0
    mismatches: List[Tuple[int, int, int]] = field(default_factory=list)
    first_index: Optional[int] = None
    last_index: Optional[int] = None
    skipped_engine_only: int = 0
    skipped_bfile_only: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self):
        return {
            "checked": self.checked,
            "mismatches": [list(m) for m in self.mismatches],
            "first_index": self.first_index,
            "last_index": self.last_index,
            "skipped_engine_only": self.skipped_engine_only,
            "skipped_bfile_only": self.skipped_bfile_only,
            "ok": self.ok,
        }


def verify(spec: StepSet, cap, bfile: BFile, upto: int, shift: int = 0) -> VerificationReport:
    """Compare coefficients ``0..upto`` with the b-file.

    The b-file's entry at index ``i`` is compared with the coefficient at
    ``i + shift``.  Mismatches are ``(index, expected, computed)`` with
    ``index`` in b-file numbering.
    """
    if upto < 0:
        raise ValueError(f"upto must be >= 0, got {upto}")
    coeffs = series(spec, cap, upto).coeffs
    report = VerificationReport()
    seen = set()
    for idx, expected in bfile.entries:
        k = idx + shift
        if not 0 <= k <= upto:
            report.skipped_bfile_only += 1
            continue
        seen.add(k)
        report.checked += 1
        if report.first_index is None:
            report.first_index = idx
        report.last_index = idx
        if coeffs[k] != expected:
            report.mismatches.append((idx, expected, coeffs[k]))
    report.skipped_engine_only = (upto + 1) - len(seen)
    return report


#: The ten sequences cited for the applications, keyed by A-number:
#: (step-set syntax, multiplicity cap or None).
PAPER_SEQUENCES = {
    "A000041": ("all", None),
    "A000009": ("all", 1),
    "A000700": ("odd", 1),
    "A002865": ("2..", None),
    "A008619": ("{1,2}", None),
    "A000726": ("all", 2),
    "A000607": ("primes", None),
    "A000586": ("primes", 1),
    "A003107": ("fibonacci", None),
    "A000119": ("fibonacci", 1),
}


def bfile_name(anum: str) -> str:
    return f"b{anum[1:]}.txt"


def pinned_bfile(anum: str) -> BFile:
    """Short prefix shipped with the package."""
    ref = resources.files("stairs").joinpath("data", bfile_name(anum))
    return parse_bfile(ref.read_text(), bfile_name(anum))


def find_bfile(anum: str, directory=None) -> Optional[Path]:
    """Locate a user-supplied b-file in ``directory`` or ``$STAIRS_BFILE_DIR``."""
    directory = directory or os.environ.get(BFILE_DIR_ENV)
    if not directory:
        return None
    path = Path(directory) / bfile_name(anum)
    return path if path.is_file() else None
