"""Runs NED -> RL -> QB -> execute for one question and assembles the trace.

Stage failures never abort the run: an empty output downgrades the stage
to the NoAnswer class and the later stages execute on whatever is left,
each explaining its own outcome.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .classifiers import ClassifierModel, predict
from .components import (
    NED,
    QB,
    RL,
    STAGE_NAMES,
    TASKS,
    ComponentOutput,
    RelationLexicon,
    build_query,
    link_entities,
    link_relations,
)
from .graph import Graph
from .outcomes import NO_ANSWER, SUCCESS
from .questions import FeatureVector, Question, extract_features, make_question
from .sparql import ASK, AnswerSet, Query, evaluate, query_to_text
from .templates import DEFAULT_PREFIXES, Explanation, TemplateRepository, compact_iri, render


@dataclass
class PipelineConfig:
    graph: Graph
    models: dict[str, ClassifierModel]
    repo: TemplateRepository
    prefixes: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_PREFIXES))
    lexicon: RelationLexicon | None = None

    def __post_init__(self):
        missing = [task for task in TASKS if task not in self.models]
        if missing:
            raise ValueError(f"pipeline config lacks models for tasks: {missing}")
        schemas = {model.schema for model in self.models.values()}
        if len(schemas) != 1:
            raise ValueError("all task models must share one feature schema")
        if self.lexicon is None:
            self.lexicon = RelationLexicon.from_graph(self.graph)


@dataclass
class StageRecord:
    task: str
    output: ComponentOutput
    predicted_class: str
    probabilities: list[float]
    effective_class: str
    mismatch: bool
    explanations: list[Explanation]
    wall_time: float


@dataclass
class PipelineTrace:
    question: Question
    features: FeatureVector
    stages: list[StageRecord]
    final_answer: AnswerSet | None


def _effective_class(predicted: str, output_empty: bool) -> tuple[str, bool]:
    """Emptiness is authoritative; disagreement sets the mismatch flag."""
    if output_empty:
        return NO_ANSWER, predicted != NO_ANSWER
    if predicted == NO_ANSWER:
        return SUCCESS, True
    return predicted, False


def answer_question(question_text: str, config: PipelineConfig, qid: str | None = None) -> PipelineTrace:
    question = make_question(question_text, qid)
    features = extract_features(question)
    predictions = {task: predict(config.models[task], features) for task in TASKS}

    stages: list[StageRecord] = []

    def record(task: str, output: ComponentOutput, output_empty: bool, started: float) -> None:
        predicted, probabilities = predictions[task]
        effective, mismatch = _effective_class(predicted, output_empty)
        explanations = render(
            config.repo, task, effective, output, question, config.prefixes, mismatch
        )
        stages.append(
            StageRecord(
                task=task,
                output=output,
                predicted_class=predicted,
                probabilities=probabilities,
                effective_class=effective,
                mismatch=mismatch,
                explanations=explanations,
                wall_time=time.perf_counter() - started,
            )
        )

    started = time.perf_counter()
    entities = link_entities(question, config.graph)
    record(NED, entities, entities.empty, started)

    started = time.perf_counter()
    relations = link_relations(question, config.graph, entities, config.lexicon)
    record(RL, relations, relations.empty, started)

    started = time.perf_counter()
    query_output = build_query(question, entities, relations, config.graph)
    final_answer = None
    if isinstance(query_output.payload, Query):
        final_answer = evaluate(config.graph, query_output.payload)
    qb_empty = query_output.empty or (final_answer is not None and final_answer.empty)
    record(QB, query_output, qb_empty, started)

    return PipelineTrace(question=question, features=features, stages=stages, final_answer=final_answer)


def explanation_flow(trace: PipelineTrace) -> list[Explanation]:
    """All explanations in stage order: NED first, then RL, then QB."""
    flow: list[Explanation] = []
    for stage in trace.stages:
        flow.extend(stage.explanations)
    return flow


def answer_to_dict(answers: AnswerSet | None, prefixes: dict[str, str]) -> dict | None:
    from .rdf import Iri

    if answers is None:
        return None
    if answers.form == ASK:
        return {"form": "ASK", "value": bool(answers.boolean)}

    def term_text(term) -> str:
        if isinstance(term, Iri):
            return compact_iri(term, prefixes)
        return term.lexical_form

    rows = sorted(tuple(term_text(t) for t in row) for row in answers.rows)
    return {"form": "SELECT", "variables": list(answers.variables), "rows": [list(r) for r in rows]}


def _output_to_dict(output: ComponentOutput, prefixes: dict[str, str]) -> dict:
    if isinstance(output.payload, Query):
        return {"query": query_to_text(output.payload, prefixes)}
    if output.task == NED:
        return {
            "entities": [
                {
                    "surface": link.text,
                    "start": link.start,
                    "end": link.end,
                    "iri": link.entity.value,
                    "compact": compact_iri(link.entity, prefixes),
                }
                for link in (output.payload or ())
            ]
        }
    if output.task == RL:
        return {
            "relations": [
                {
                    "surface": link.text,
                    "start": link.start,
                    "end": link.end,
                    "iri": link.predicate.value,
                    "compact": compact_iri(link.predicate, prefixes),
                }
                for link in (output.payload or ())
            ]
        }
    return {"query": None}


def trace_to_dict(
    trace: PipelineTrace,
    prefixes: dict[str, str] | None = None,
    include_explanations: bool = True,
    include_timings: bool = True,
) -> dict:
    """Stable-field serialization of a trace for the CLI, API, and UI."""
    prefixes = prefixes if prefixes is not None else DEFAULT_PREFIXES
    stages = []
    for stage in trace.stages:
        doc = {
            "task": stage.task,
            "stage": STAGE_NAMES[stage.task],
            "empty": stage.output.empty,
            "predicted_class": stage.predicted_class,
            "probabilities": stage.probabilities,
            "effective_class": stage.effective_class,
            "mismatch": stage.mismatch,
            "output": _output_to_dict(stage.output, prefixes),
        }
        if include_explanations:
            doc["explanations"] = [
                {
                    "template_id": e.template_id,
                    "class": e.outcome_class,
                    "text": e.text,
                    "mismatch": e.mismatch,
                }
                for e in stage.explanations
            ]
        if include_timings:
            doc["wall_time_ms"] = stage.wall_time * 1000.0
        stages.append(doc)
    return {
        "question": {"id": trace.question.id, "text": trace.question.text},
        "features": {"schema": list(trace.features.schema), "values": list(trace.features.values)},
        "stages": stages,
        "final_answer": answer_to_dict(trace.final_answer, prefixes),
    }
