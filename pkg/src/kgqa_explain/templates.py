"""Explanation templates: repository loading, selection, and rendering.

Templates are data, not code. The default repository ships with the
package and covers every (task, outcome class) pair with at least 11
templates. Selection is a pure function of (task, class, arity, variant).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .components import NED, QB, RL, STAGE_NAMES, TASKS, ComponentOutput
from .outcomes import OUTCOME_CLASSES, SUCCESS
from .questions import Question, pos_tag
from .rdf import Iri
from .sparql import Query, query_to_text

WILDCARD_ARITY = "*"

PLACEHOLDER_VOCABULARY = {
    NED: {"surface", "entity", "stage"},
    RL: {"surface", "predicate", "stage"},
    QB: {"query", "stage"},
}

DEFAULT_PREFIXES = {
    "dbr": "http://dbpedia.org/resource/",
    "dbo": "http://dbpedia.org/ontology/",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
}

_PLACEHOLDER_RE = re.compile(r"\{([a-z_]+)\}")


class TemplateError(ValueError):
    pass


class RenderError(TemplateError):
    """Template demanded content the component output cannot supply."""


@dataclass(frozen=True)
class ExplanationTemplate:
    id: str
    task: str
    outcome_class: str
    arity: int | str
    pattern: str
    variant: str | None = None

    def placeholders(self) -> set[str]:
        return set(_PLACEHOLDER_RE.findall(self.pattern))


@dataclass(frozen=True)
class Explanation:
    task: str
    outcome_class: str
    template_id: str
    text: str
    mismatch: bool = False


class TemplateRepository:
    def __init__(self, templates: list[ExplanationTemplate]):
        self.templates = list(templates)
        self.by_pair: dict[tuple[str, str], list[ExplanationTemplate]] = {}
        seen_ids: set[str] = set()
        for t in self.templates:
            if t.id in seen_ids:
                raise TemplateError(f"duplicate template id: {t.id!r}")
            seen_ids.add(t.id)
            if t.task not in TASKS:
                raise TemplateError(f"template {t.id!r}: unknown task {t.task!r}")
            if t.outcome_class not in OUTCOME_CLASSES:
                raise TemplateError(f"template {t.id!r}: unknown class {t.outcome_class!r}")
            unknown = t.placeholders() - PLACEHOLDER_VOCABULARY[t.task]
            if unknown:
                raise TemplateError(
                    f"template {t.id!r}: unknown placeholders {sorted(unknown)} for task {t.task}"
                )
            self.by_pair.setdefault((t.task, t.outcome_class), []).append(t)
        missing = [
            (task, cls)
            for task in TASKS
            for cls in OUTCOME_CLASSES
            if (task, cls) not in self.by_pair
        ]
        if missing:
            raise TemplateError(f"repository does not cover (task, class) pairs: {missing}")
        if len(self.templates) < 11:
            raise TemplateError(f"repository must hold at least 11 templates, got {len(self.templates)}")

    def __len__(self) -> int:
        return len(self.templates)


def parse_templates(text: str) -> TemplateRepository:
    """Parse the blank-line-separated template record format."""
    templates = []
    records = re.split(r"\n\s*\n", text)
    for record in records:
        lines = [ln for ln in record.splitlines() if not ln.strip().startswith("#")]
        if not any(ln.strip() for ln in lines):
            continue
        fields: dict[str, str] = {}
        text_parts: list[str] = []
        in_text = False
        for line in lines:
            stripped = line.strip()
            if in_text:
                text_parts.append(stripped)
                continue
            if not stripped:
                continue
            key, _, value = stripped.partition(":")
            key = key.strip().lower()
            if key == "text":
                in_text = True
                if value.strip():
                    text_parts.append(value.strip())
            elif key in ("id", "task", "class", "arity", "variant"):
                fields[key] = value.strip()
            else:
                raise TemplateError(f"unknown template header {key!r}")
        for required in ("id", "task", "class", "arity"):
            if required not in fields:
                raise TemplateError(f"template record missing {required!r} header")
        if not text_parts:
            raise TemplateError(f"template {fields['id']!r} has no text")
        arity: int | str
        if fields["arity"] == WILDCARD_ARITY:
            arity = WILDCARD_ARITY
        else:
            arity = int(fields["arity"])
            if arity < 1:
                raise TemplateError(f"template {fields['id']!r}: arity must be positive or '*'")
        templates.append(
            ExplanationTemplate(
                id=fields["id"],
                task=fields["task"],
                outcome_class=fields["class"],
                arity=arity,
                variant=fields.get("variant") or None,
                pattern=" ".join(part for part in text_parts if part),
            )
        )
    return TemplateRepository(templates)


def load_templates(path: str | Path | None = None) -> TemplateRepository:
    """Load a template file; without a path, the packaged default set."""
    if path is None:
        text = resources.files("kgqa_explain").joinpath("data/templates.txt").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_templates(text)


def select_template(
    repo: TemplateRepository,
    task: str,
    outcome_class: str,
    arity: int,
    variant: str | None = None,
) -> ExplanationTemplate:
    """Deterministic choice: exact arity, then wildcard; matching variant,
    then unmarked; smallest id breaks remaining ties."""
    pool = repo.by_pair[(task, outcome_class)]
    exact = [t for t in pool if t.arity == arity]
    pool = exact or [t for t in pool if t.arity == WILDCARD_ARITY] or pool
    if variant is not None:
        with_variant = [t for t in pool if t.variant == variant]
        pool = with_variant or [t for t in pool if t.variant is None] or pool
    else:
        unmarked = [t for t in pool if t.variant is None]
        pool = unmarked or pool
    return min(pool, key=lambda t: t.id)


def compact_iri(iri: Iri, prefixes: dict[str, str] | None = None) -> str:
    prefixes = prefixes if prefixes is not None else DEFAULT_PREFIXES
    for prefix, base in prefixes.items():
        if iri.value.startswith(base) and len(iri.value) > len(base):
            return f"{prefix}:{iri.value[len(base):]}"
    return iri.value


def join_naturally(items: list[str]) -> str:
    if not items:
        return ""
    if len(items) == 1:
        return items[0]
    if len(items) == 2:
        return f"{items[0]} and {items[1]}"
    return ", ".join(items[:-1]) + f", and {items[-1]}"


def _fill(template: ExplanationTemplate, context: dict[str, str], mismatch: bool) -> Explanation:
    missing = template.placeholders() - set(context)
    if missing:
        raise RenderError(
            f"template {template.id!r} needs {sorted(missing)} but the component "
            "output does not supply them"
        )
    text = _PLACEHOLDER_RE.sub(lambda m: context[m.group(1)], template.pattern)
    residual = _PLACEHOLDER_RE.search(text)
    if residual:
        raise RenderError(f"unresolved placeholder {residual.group(0)!r} after rendering")
    return Explanation(
        task=template.task,
        outcome_class=template.outcome_class,
        template_id=template.id,
        text=text,
        mismatch=mismatch,
    )


def span_variant(question: Question, start: int, end: int) -> str | None:
    """Dominant POS (PROPN vs NOUN) of the tokens inside a matched span."""
    tags = pos_tag(question.tokens)[start:end]
    propn = sum(1 for t in tags if t == "PROPN")
    noun = sum(1 for t in tags if t == "NOUN")
    if propn == 0 and noun == 0:
        return None
    return "PROPN" if propn >= noun else "NOUN"


def _item_context(task: str, link, stage: str, prefixes) -> dict[str, str]:
    if task == NED:
        return {"surface": link.text, "entity": compact_iri(link.entity, prefixes), "stage": stage}
    return {"surface": link.text, "predicate": compact_iri(link.predicate, prefixes), "stage": stage}


def render(
    repo: TemplateRepository,
    task: str,
    outcome_class: str,
    output: ComponentOutput,
    question: Question,
    prefixes: dict[str, str] | None = None,
    mismatch: bool = False,
) -> list[Explanation]:
    """Render the explanation(s) for one stage.

    Success-class NED/RL outputs produce one explanation per linked item
    unless the repository holds a template whose arity equals the full
    payload size.
    """
    prefixes = prefixes if prefixes is not None else DEFAULT_PREFIXES
    stage = STAGE_NAMES[task]

    if task in (NED, RL) and outcome_class == SUCCESS:
        links = list(output.payload or ())
        if not links:
            raise RenderError(f"Success explanation for {task} requires a non-empty output")
        pool = repo.by_pair[(task, outcome_class)]
        if len(links) > 1 and any(t.arity == len(links) for t in pool):
            variants = [span_variant(question, ln.start, ln.end) for ln in links]
            variant = variants[0] if len(set(variants)) == 1 else None
            template = select_template(repo, task, outcome_class, len(links), variant)
            context = {"stage": stage}
            if task == NED:
                context["surface"] = join_naturally([ln.text for ln in links])
                context["entity"] = join_naturally([compact_iri(ln.entity, prefixes) for ln in links])
            else:
                context["surface"] = join_naturally([ln.text for ln in links])
                context["predicate"] = join_naturally(
                    [compact_iri(ln.predicate, prefixes) for ln in links]
                )
            return [_fill(template, context, mismatch)]
        explanations = []
        for link in links:
            variant = span_variant(question, link.start, link.end)
            template = select_template(repo, task, outcome_class, 1, variant)
            explanations.append(_fill(template, _item_context(task, link, stage, prefixes), mismatch))
        return explanations

    context: dict[str, str] = {"stage": stage}
    if task == QB and isinstance(output.payload, Query):
        context["query"] = query_to_text(output.payload, prefixes)
    if task in (NED, RL) and output.payload and not isinstance(output.payload, Query):
        links = list(output.payload)
        context["surface"] = join_naturally([ln.text for ln in links])
        if task == NED:
            context["entity"] = join_naturally([compact_iri(ln.entity, prefixes) for ln in links])
        else:
            context["predicate"] = join_naturally([compact_iri(ln.predicate, prefixes) for ln in links])
    template = select_template(repo, task, outcome_class, output.arity, None)
    return [_fill(template, context, mismatch)]
