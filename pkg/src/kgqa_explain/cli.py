"""Command-line entry points: ingest, train, ask, evaluate, serve."""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .benchmark import build_report, build_training_set, load_dataset
from .classifiers import (
    CLASSIFIER_KINDS,
    LOGISTIC_REGRESSION,
    load_model,
    save_model,
    train,
)
from .components import RelationLexicon, TASKS, load_synonyms
from .graph import load_graph, save_graph
from .pipeline import PipelineConfig, answer_question, explanation_flow, trace_to_dict
from .templates import load_templates

_PLACEHOLDER_RE = re.compile(r"\{[a-z_]+\}")

MODEL_FILES = {"NED": "ned.json", "RL": "rl.json", "QB": "qb.json"}


def _resolve_kind(name: str) -> str:
    for kind in CLASSIFIER_KINDS:
        if kind.lower() == name.lower():
            return kind
    raise SystemExit(f"unknown classifier kind {name!r}; choose from {CLASSIFIER_KINDS}")


def _load_lexicon(graph, path: str | None) -> RelationLexicon:
    synonyms = load_synonyms(path) if path else None
    return RelationLexicon.from_graph(graph, synonyms)


def _load_pipeline_config(args) -> PipelineConfig:
    graph = load_graph(args.kg)
    models = {}
    for task in TASKS:
        model_path = Path(args.models) / MODEL_FILES[task]
        if not model_path.exists():
            raise SystemExit(f"missing model file: {model_path}")
        models[task] = load_model(model_path)
    repo = load_templates(args.templates)
    lexicon = _load_lexicon(graph, args.lexicon)
    return PipelineConfig(graph=graph, models=models, repo=repo, lexicon=lexicon)


def cmd_ingest(args) -> int:
    graph = load_graph(args.kg)
    save_graph(graph, args.out)
    print(f"ingested {len(graph)} triples -> {args.out}")
    return 0


def cmd_train(args) -> int:
    graph = load_graph(args.kg)
    lexicon = _load_lexicon(graph, args.lexicon)
    task = args.component.upper()
    if task not in TASKS:
        raise SystemExit(f"unknown component {args.component!r}; choose ned, rl, or qb")
    kind = _resolve_kind(args.kind)
    load_result = load_dataset(args.dataset, graph)
    examples = build_training_set(load_result.records, graph, task, lexicon)
    model = train(kind, examples, task=task, k=args.k, seed=args.seed, balance=args.balance)
    save_model(model, args.out)
    print(f"trained {kind} for {task} on {len(examples)} examples -> {args.out}")
    return 0


def cmd_ask(args) -> int:
    config = _load_pipeline_config(args)
    trace = answer_question(args.question, config)
    doc = trace_to_dict(trace, config.prefixes)
    if args.trace_out:
        Path(args.trace_out).write_text(json.dumps(doc, indent=2, sort_keys=True), encoding="utf-8")
    answer = doc["final_answer"]
    if answer is None:
        print("answer: (none)")
    elif answer["form"] == "ASK":
        print(f"answer: {str(answer['value']).lower()}")
    else:
        values = ", ".join(" ".join(row) for row in answer["rows"]) or "(empty)"
        print(f"answer: {values}")
    if args.explain:
        for explanation in explanation_flow(trace):
            print(f"[{explanation.task}/{explanation.outcome_class}] {explanation.text}")
    return 0


def cmd_evaluate(args) -> int:
    graph = load_graph(args.kg)
    lexicon = _load_lexicon(graph, args.lexicon)
    load_result = load_dataset(args.dataset, graph)
    kinds = tuple(_resolve_kind(k) for k in args.kinds) if args.kinds else CLASSIFIER_KINDS
    report = build_report(
        load_result, graph, kinds=kinds, k=args.k, seed=args.seed, lexicon=lexicon
    )

    repo = load_templates(args.templates)
    models = {
        task: train(
            LOGISTIC_REGRESSION,
            build_training_set(load_result.records, graph, task, lexicon),
            task=task,
            k=args.k,
            seed=args.seed,
        )
        for task in TASKS
    }
    config = PipelineConfig(graph=graph, models=models, repo=repo, lexicon=lexicon)
    explanations = 0
    unresolved = 0
    missing_stage = 0
    for record in load_result.records:
        trace = answer_question(record.question.text, config, qid=record.id)
        for stage in trace.stages:
            if not stage.explanations:
                missing_stage += 1
            for explanation in stage.explanations:
                explanations += 1
                if _PLACEHOLDER_RE.search(explanation.text):
                    unresolved += 1
    report.pipeline_check = {
        "questions": len(load_result.records),
        "explanations": explanations,
        "unresolved_placeholders": unresolved,
        "stages_without_explanation": missing_stage,
    }

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "report.txt").write_text(report.to_text(), encoding="utf-8")
    (out_dir / "report.json").write_text(
        json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    for task in TASKS:
        save_model(models[task], out_dir / MODEL_FILES[task])
    print(report.to_text())
    print(f"report written to {out_dir}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import FeedbackLog, create_app

    config = _load_pipeline_config(args)
    survey_questions = []
    if args.survey_questions:
        survey_questions = json.loads(Path(args.survey_questions).read_text(encoding="utf-8"))
    feedback_log = FeedbackLog(args.feedback_log)
    app = create_app(
        config,
        feedback_log=feedback_log,
        survey_questions=survey_questions,
        ui_dir=args.ui_dir,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kgqa", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse an N-Triples file into a reloadable store")
    p.add_argument("--kg", required=True, help="N-Triples file")
    p.add_argument("--out", required=True, help="snapshot output path")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("train", help="train one outcome classifier")
    p.add_argument("--dataset", required=True)
    p.add_argument("--kg", required=True)
    p.add_argument("--component", required=True, choices=["ned", "rl", "qb", "NED", "RL", "QB"])
    p.add_argument("--kind", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--lexicon", default=None, help="relation synonym TSV")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=10, help="cross-validation folds")
    p.add_argument("--balance", choices=["none", "oversample"], default="none")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("ask", help="answer one question with explanations")
    p.add_argument("question")
    p.add_argument("--kg", required=True)
    p.add_argument("--models", required=True, help="directory with ned.json/rl.json/qb.json")
    p.add_argument("--templates", default=None)
    p.add_argument("--lexicon", default=None)
    p.add_argument("--explain", action="store_true")
    p.add_argument("--trace-out", default=None)
    p.set_defaults(func=cmd_ask)

    p = sub.add_parser("evaluate", help="component metrics and classifier CV report")
    p.add_argument("--kg", required=True)
    p.add_argument("--dataset", required=True)
    p.add_argument("--templates", default=None)
    p.add_argument("--kinds", nargs="*", default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--lexicon", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=10)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("serve", help="HTTP API plus static UI hosting")
    p.add_argument("--kg", required=True)
    p.add_argument("--models", required=True)
    p.add_argument("--templates", default=None)
    p.add_argument("--lexicon", default=None)
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--survey-questions", default=None)
    p.add_argument("--feedback-log", default="feedback.jsonl")
    p.add_argument("--ui-dir", default=None)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
