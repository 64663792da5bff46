"""File helpers for molecule lists."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def read_smiles_lines(path: str | Path) -> list[str]:
    """Read one SMILES per line; blank lines and '#' comments skipped."""
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line.split()[0])
    return out


def bundled_corpus() -> list[str]:
    """The packaged round-trip corpus, one SMILES per entry."""
    text = (
        resources.files("chemforge").joinpath("data/corpus_1k.smi").read_text("utf-8")
    )
    return [ln.strip() for ln in text.splitlines() if ln.strip()]
