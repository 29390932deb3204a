#!/usr/bin/env python3
"""Run the full desk benchmark: component metrics, 10-fold CV for all five
classifier families on all three tasks, and the pipeline explanation check.

Writes out/desk_report/{report.txt,report.json} plus the trained logistic
regression models used by `kgqa ask` and `kgqa serve`.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

sys.path.insert(0, str(ROOT / "src"))

from kgqa_explain.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(
        main(
            [
                "evaluate",
                "--kg",
                str(ROOT / "data" / "desk_kg.nt"),
                "--dataset",
                str(ROOT / "data" / "desk_questions.json"),
                "--lexicon",
                str(ROOT / "data" / "relation_synonyms.tsv"),
                "--seed",
                "0",
                "--out",
                str(ROOT / "out" / "desk_report"),
            ]
            + sys.argv[1:]
        )
    )
