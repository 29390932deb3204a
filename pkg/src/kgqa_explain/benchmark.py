"""Dataset loading, per-component evaluation, training sets, and reports.

Datasets are JSON arrays of {id, question, sparql} records. Gold
annotations are derived by parsing the gold SPARQL: IRIs in subject or
object position are gold entities, IRIs in predicate position gold
relations, and the executed query yields the gold answers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .classifiers import (
    CLASSIFIER_KINDS,
    CVReport,
    TrainingExample,
    cross_validate,
)
from .components import (
    NED,
    RL,
    TASKS,
    ComponentOutput,
    RelationLexicon,
    build_query,
    link_entities,
    link_relations,
)
from .graph import Graph
from .outcomes import label_example, micro_f1
from .questions import Question, extract_features, make_question
from .rdf import Iri
from .sparql import (
    AnswerSet,
    Query,
    QueryError,
    UnsupportedQueryError,
    answer_key_set,
    evaluate,
    parse_query,
)
from .templates import DEFAULT_PREFIXES


@dataclass(frozen=True)
class DatasetRecord:
    id: str
    question: Question
    gold_sparql: str
    gold_query: Query
    gold_entities: frozenset[Iri]
    gold_predicates: frozenset[Iri]
    gold_answers: AnswerSet


@dataclass
class DatasetLoadResult:
    records: list[DatasetRecord]
    dropped_empty: int
    dropped_unsupported: int

    @property
    def total(self) -> int:
        return len(self.records) + self.dropped_empty + self.dropped_unsupported


def _gold_annotations(query: Query) -> tuple[frozenset[Iri], frozenset[Iri]]:
    entities = set()
    predicates = set()
    for pattern in query.patterns:
        if isinstance(pattern.subject, Iri):
            entities.add(pattern.subject)
        if isinstance(pattern.object, Iri):
            entities.add(pattern.object)
        if isinstance(pattern.predicate, Iri):
            predicates.add(pattern.predicate)
    return frozenset(entities), frozenset(predicates)


def load_dataset(
    source: str | Path | list,
    graph: Graph,
    prefixes: dict[str, str] | None = None,
) -> DatasetLoadResult:
    """Load records, compute gold answers, and drop unusable entries.

    Records whose gold query is outside the ASK/SELECT BGP subset are
    dropped as unsupported; records whose gold answers are empty are
    dropped separately, mirroring benchmark filtering practice.
    """
    if isinstance(source, (str, Path)):
        raw = json.loads(Path(source).read_text(encoding="utf-8"))
    else:
        raw = source
    if not isinstance(raw, list):
        raise ValueError("dataset must be a JSON array of records")
    prefixes = prefixes if prefixes is not None else DEFAULT_PREFIXES

    records: list[DatasetRecord] = []
    seen_ids: set[str] = set()
    dropped_empty = 0
    dropped_unsupported = 0
    for i, entry in enumerate(raw):
        missing = {"id", "question", "sparql"} - set(entry)
        if missing:
            raise ValueError(f"record {i} is missing keys {sorted(missing)}")
        rid = str(entry["id"])
        if rid in seen_ids:
            raise ValueError(f"duplicate record id: {rid!r}")
        seen_ids.add(rid)
        try:
            gold_query = parse_query(entry["sparql"], prefixes)
        except UnsupportedQueryError:
            dropped_unsupported += 1
            continue
        except QueryError as exc:
            raise ValueError(f"record {rid!r}: malformed gold query: {exc}") from exc
        gold_answers = evaluate(graph, gold_query)
        if gold_answers.empty:
            dropped_empty += 1
            continue
        entities, predicates = _gold_annotations(gold_query)
        records.append(
            DatasetRecord(
                id=rid,
                question=make_question(entry["question"], qid=rid),
                gold_sparql=entry["sparql"],
                gold_query=gold_query,
                gold_entities=entities,
                gold_predicates=predicates,
                gold_answers=gold_answers,
            )
        )
    return DatasetLoadResult(records, dropped_empty, dropped_unsupported)


def run_components(
    question: Question, graph: Graph, lexicon: RelationLexicon | None = None
) -> tuple[ComponentOutput, ComponentOutput, ComponentOutput, AnswerSet | None]:
    entities = link_entities(question, graph)
    relations = link_relations(question, graph, entities, lexicon)
    query_output = build_query(question, entities, relations, graph)
    answers = None
    if isinstance(query_output.payload, Query):
        answers = evaluate(graph, query_output.payload)
    return entities, relations, query_output, answers


def _task_prediction(
    record: DatasetRecord,
    task: str,
    entities: ComponentOutput,
    relations: ComponentOutput,
    query_output: ComponentOutput,
    answers: AnswerSet | None,
) -> tuple[set, set, bool]:
    """(predicted set, gold set, output-empty flag) for one record and task."""
    if task == NED:
        predicted = {link.entity for link in (entities.payload or ())}
        return predicted, set(record.gold_entities), entities.empty
    if task == RL:
        predicted = {link.predicate for link in (relations.payload or ())}
        return predicted, set(record.gold_predicates), relations.empty
    predicted = answer_key_set(answers) if answers is not None else set()
    empty = query_output.empty or (answers is not None and answers.empty)
    return predicted, answer_key_set(record.gold_answers), empty


@dataclass
class ComponentEvaluation:
    task: str
    per_question: list[tuple[str, float, float, float]]
    precision: float
    recall: float
    f_score: float
    skipped: int = 0


def evaluate_component(
    records, graph: Graph, task: str, lexicon: RelationLexicon | None = None
) -> ComponentEvaluation:
    """Per-question micro P/R/F for one task, macro-averaged over questions."""
    if lexicon is None:
        lexicon = RelationLexicon.from_graph(graph)
    rows = []
    skipped = 0
    for record in records:
        outputs = run_components(record.question, graph, lexicon)
        predicted, gold, _ = _task_prediction(record, task, *outputs)
        if not gold:
            skipped += 1
            continue
        p, r, f = micro_f1(predicted, gold)
        rows.append((record.id, p, r, f))
    n = len(rows)
    if n == 0:
        return ComponentEvaluation(task, [], 0.0, 0.0, 0.0, skipped)
    return ComponentEvaluation(
        task=task,
        per_question=rows,
        precision=sum(r[1] for r in rows) / n,
        recall=sum(r[2] for r in rows) / n,
        f_score=sum(r[3] for r in rows) / n,
        skipped=skipped,
    )


def build_training_set(
    records, graph: Graph, task: str, lexicon: RelationLexicon | None = None
) -> list[TrainingExample]:
    """One labeled example per record with a usable gold set for the task."""
    if lexicon is None:
        lexicon = RelationLexicon.from_graph(graph)
    examples = []
    for record in records:
        outputs = run_components(record.question, graph, lexicon)
        predicted, gold, empty = _task_prediction(record, task, *outputs)
        if not gold:
            continue
        _, _, f = micro_f1(predicted, gold)
        examples.append(
            TrainingExample(
                question_id=record.id,
                features=extract_features(record.question),
                label=label_example(empty, f),
                f_score=f,
            )
        )
    return examples


@dataclass
class EvaluationReport:
    retained: int
    dropped_empty: int
    dropped_unsupported: int
    component_metrics: dict[str, ComponentEvaluation]
    cv_reports: dict[str, dict[str, CVReport]]  # task -> kind -> report
    seed: int
    k: int
    pipeline_check: dict = field(default_factory=dict)

    def best_per_task(self) -> dict[str, tuple[str, float]]:
        best = {}
        for task, by_kind in self.cv_reports.items():
            ranked = sorted(
                by_kind.items(), key=lambda item: (-item[1].mean_accuracy, CLASSIFIER_KINDS.index(item[0]))
            )
            best[task] = (ranked[0][0], ranked[0][1].mean_accuracy)
        return best

    def to_dict(self) -> dict:
        return {
            "counts": {
                "retained": self.retained,
                "dropped_empty": self.dropped_empty,
                "dropped_unsupported": self.dropped_unsupported,
                "total": self.retained + self.dropped_empty + self.dropped_unsupported,
            },
            "seed": self.seed,
            "k": self.k,
            "component_metrics": {
                task: {
                    "precision": ev.precision,
                    "recall": ev.recall,
                    "f_score": ev.f_score,
                    "questions": len(ev.per_question),
                    "skipped": ev.skipped,
                }
                for task, ev in self.component_metrics.items()
            },
            "classifier_accuracy": {
                task: {kind: report.to_dict() for kind, report in by_kind.items()}
                for task, by_kind in self.cv_reports.items()
            },
            "best_per_task": {
                task: {"kind": kind, "mean_accuracy": acc}
                for task, (kind, acc) in self.best_per_task().items()
            },
            "pipeline_check": self.pipeline_check,
        }

    def to_text(self) -> str:
        lines = []
        lines.append("Dataset")
        lines.append(
            f"  retained={self.retained} dropped_empty={self.dropped_empty} "
            f"dropped_unsupported={self.dropped_unsupported}"
        )
        lines.append("")
        lines.append("Component performance (macro-averaged per question)")
        lines.append(f"  {'Task':<6} {'Precision':>9} {'Recall':>9} {'F-score':>9} {'N':>5}")
        for task in TASKS:
            ev = self.component_metrics[task]
            lines.append(
                f"  {task:<6} {ev.precision:>9.4f} {ev.recall:>9.4f} {ev.f_score:>9.4f} "
                f"{len(ev.per_question):>5}"
            )
        lines.append("")
        lines.append(f"Classifier accuracy ({self.k}-fold CV, mean over folds, seed={self.seed})")
        header = f"  {'Kind':<20}" + "".join(f" {task:>8}" for task in TASKS)
        lines.append(header)
        for kind in CLASSIFIER_KINDS:
            if not all(kind in self.cv_reports[task] for task in TASKS):
                continue
            row = f"  {kind:<20}" + "".join(
                f" {self.cv_reports[task][kind].mean_accuracy:>8.4f}" for task in TASKS
            )
            lines.append(row)
        lines.append("")
        lines.append("Best classifier per task")
        for task, (kind, acc) in self.best_per_task().items():
            lines.append(f"  {task:<6} {kind:<20} {acc:.4f}")
        if self.pipeline_check:
            lines.append("")
            lines.append("Pipeline explanation check")
            lines.append(
                f"  questions={self.pipeline_check['questions']} "
                f"explanations={self.pipeline_check['explanations']} "
                f"unresolved_placeholders={self.pipeline_check['unresolved_placeholders']} "
                f"stages_without_explanation={self.pipeline_check['stages_without_explanation']}"
            )
        return "\n".join(lines) + "\n"


def build_report(
    load_result: DatasetLoadResult,
    graph: Graph,
    kinds=CLASSIFIER_KINDS,
    k: int = 10,
    seed: int = 0,
    lexicon: RelationLexicon | None = None,
    grid=None,
) -> EvaluationReport:
    """Component metrics plus cross-validated accuracy for every kind/task."""
    if lexicon is None:
        lexicon = RelationLexicon.from_graph(graph)
    records = load_result.records
    component_metrics = {
        task: evaluate_component(records, graph, task, lexicon) for task in TASKS
    }
    cv_reports: dict[str, dict[str, CVReport]] = {task: {} for task in TASKS}
    for task in TASKS:
        examples = build_training_set(records, graph, task, lexicon)
        for kind in kinds:
            cv_reports[task][kind] = cross_validate(kind, examples, k=k, grid=grid, seed=seed)
    return EvaluationReport(
        retained=len(records),
        dropped_empty=load_result.dropped_empty,
        dropped_unsupported=load_result.dropped_unsupported,
        component_metrics=component_metrics,
        cv_reports=cv_reports,
        seed=seed,
        k=k,
    )
