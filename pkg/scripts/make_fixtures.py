#!/usr/bin/env python3
"""Regenerate the shipped .1pd fixture files from the constructions module."""

from pathlib import Path

from oneplanar.constructions import FIXTURE_NAMES, fixture
from oneplanar.io1pd import serialize

OUT = Path(__file__).resolve().parent.parent / "src" / "oneplanar" / "fixtures"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name in FIXTURE_NAMES:
        path = OUT / f"{name}.1pd"
        path.write_text(serialize(fixture(name)), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
