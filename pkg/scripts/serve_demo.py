#!/usr/bin/env python3
"""Start the demo service on the desk fixtures.

Trains the three logistic-regression outcome models if out/desk_report/
does not exist yet, then serves the API (and the web UI when frontend/dist
has been built) on port 8000.
"""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

sys.path.insert(0, str(ROOT / "src"))

from kgqa_explain.cli import main  # noqa: E402

MODELS = ROOT / "out" / "desk_report"

if __name__ == "__main__":
    if not (MODELS / "ned.json").exists():
        print("models missing; running the desk benchmark first")
        subprocess.check_call([sys.executable, str(ROOT / "scripts" / "run_desk_benchmark.py")])
    ui_dir = ROOT / "frontend" / "dist"
    args = [
        "serve",
        "--kg",
        str(ROOT / "data" / "desk_kg.nt"),
        "--models",
        str(MODELS),
        "--lexicon",
        str(ROOT / "data" / "relation_synonyms.tsv"),
        "--survey-questions",
        str(ROOT / "data" / "survey_questions.json"),
        "--feedback-log",
        str(ROOT / "out" / "feedback.jsonl"),
        "--port",
        "8000",
    ]
    if ui_dir.is_dir():
        args += ["--ui-dir", str(ui_dir)]
    sys.exit(main(args + sys.argv[1:]))
