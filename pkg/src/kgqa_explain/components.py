"""Deterministic stand-ins for the three pipeline tasks: NED, RL, and QB.

Each component maps the question (plus upstream outputs) to a typed
output. They are dictionary- and graph-driven rather than statistical so
that every downstream behavior is reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .graph import Graph, normalize_surface_form
from .questions import Question, answer_type
from .rdf import Iri, Literal
from .sparql import ASK, SELECT, Query, TriplePattern, Variable, evaluate

NED = "NED"
RL = "RL"
QB = "QB"
TASKS = (NED, RL, QB)

STAGE_NAMES = {NED: "Entity Linking", RL: "Relation Linking", QB: "Query Building"}

ANSWER_VARIABLE = "x"


@dataclass(frozen=True)
class EntityLink:
    start: int
    end: int  # exclusive token index
    text: str
    entity: Iri

    @property
    def score(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class RelationLink:
    start: int
    end: int
    text: str
    predicate: Iri


@dataclass(frozen=True)
class ComponentOutput:
    task: str
    payload: tuple | Query | None

    def __post_init__(self):
        if self.task not in TASKS:
            raise ValueError(f"unknown task: {self.task!r}")

    @property
    def empty(self) -> bool:
        if self.payload is None:
            return True
        if isinstance(self.payload, Query):
            return False
        return len(self.payload) == 0

    @property
    def arity(self) -> int:
        if self.payload is None:
            return 0
        if isinstance(self.payload, Query):
            return 1
        return len(self.payload)


def _camel_split(name: str) -> str:
    spaced = re.sub(r"(?<=[a-z0-9])(?=[A-Z])", " ", name)
    return " ".join(spaced.replace("_", " ").replace("-", " ").split()).lower()


class RelationLexicon:
    """Surface forms for graph predicates: local names, labels, synonyms."""

    def __init__(self, surface_map: dict[str, set[Iri]]):
        self.surface_map = surface_map
        self.max_tokens = max((len(k.split()) for k in surface_map), default=0)

    @classmethod
    def from_graph(cls, graph: Graph, synonyms: dict[str, Iri] | None = None) -> "RelationLexicon":
        surface_map: dict[str, set[Iri]] = {}

        def add(surface: str, predicate: Iri) -> None:
            key = normalize_surface_form(surface)
            if key:
                surface_map.setdefault(key, set()).add(predicate)

        for predicate in graph.predicates():
            if predicate in graph.label_predicates:
                continue
            local = predicate.local_name()
            add(local, predicate)
            add(_camel_split(local), predicate)
            for label in graph.objects(predicate, graph.label_predicates[0]):
                if isinstance(label, Literal):
                    add(label.lexical_form, predicate)
        for surface, predicate in (synonyms or {}).items():
            add(surface, predicate)
        return cls(surface_map)

    def lookup(self, phrase: str) -> set[Iri]:
        return set(self.surface_map.get(normalize_surface_form(phrase), set()))


def parse_synonyms(text: str) -> dict[str, Iri]:
    """Parse the `surface<TAB>predicate-IRI` lexicon format."""
    synonyms: dict[str, Iri] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "\t" not in stripped:
            raise ValueError(f"line {line_no}: expected TAB-separated surface and IRI")
        surface, _, iri = stripped.partition("\t")
        synonyms[surface.strip()] = Iri(iri.strip().strip("<>"))
    return synonyms


def load_synonyms(path: str | Path) -> dict[str, Iri]:
    return parse_synonyms(Path(path).read_text(encoding="utf-8"))


def _is_punct_token(token: str) -> bool:
    return all(not ch.isalnum() for ch in token)


def _greedy_spans(tokens, max_n: int, taken: list[bool], match):
    """Longest-match scan: n-grams from max_n down to 1, left to right.

    Spans never start or end on a punctuation-only token.
    """
    spans = []
    for n in range(min(max_n, len(tokens)), 0, -1):
        for start in range(0, len(tokens) - n + 1):
            end = start + n
            if any(taken[start:end]):
                continue
            if _is_punct_token(tokens[start]) or _is_punct_token(tokens[end - 1]):
                continue
            phrase = " ".join(tokens[start:end])
            found = match(phrase)
            if found:
                choice = min(found)  # lexicographically smallest IRI
                spans.append((start, end, phrase, choice))
                for i in range(start, end):
                    taken[i] = True
    spans.sort(key=lambda s: s[0])
    return spans


def link_entities(question: Question, graph: Graph) -> ComponentOutput:
    """Greedy longest-match entity links over the graph's label index.

    IRIs that occur in predicate position are properties, not entities,
    so their labels never produce an entity link.
    """
    tokens = list(question.tokens)
    max_n = max((len(k.split()) for k in graph.label_index), default=0)
    taken = [False] * len(tokens)
    properties = graph.predicates()

    def match(phrase: str) -> set[Iri]:
        key = normalize_surface_form(phrase)
        found = graph.label_index.get(key, set()) if key else set()
        return {iri for iri in found if iri not in properties}

    spans = _greedy_spans(tokens, max_n, taken, match)
    links = tuple(EntityLink(start, end, text, iri) for start, end, text, iri in spans)
    return ComponentOutput(task=NED, payload=links)


def link_relations(
    question: Question,
    graph: Graph,
    entities: ComponentOutput,
    lexicon: RelationLexicon | None = None,
) -> ComponentOutput:
    """Match tokens outside entity spans against the relation lexicon."""
    if lexicon is None:
        lexicon = RelationLexicon.from_graph(graph)
    tokens = list(question.tokens)
    taken = [False] * len(tokens)
    if entities.payload and not isinstance(entities.payload, Query):
        for link in entities.payload:
            for i in range(link.start, link.end):
                taken[i] = True
    spans = _greedy_spans(tokens, lexicon.max_tokens, taken, lexicon.lookup)
    links = tuple(RelationLink(start, end, text, iri) for start, end, text, iri in spans)
    return ComponentOutput(task=RL, payload=links)


def build_query(
    question: Question,
    entities: ComponentOutput,
    relations: ComponentOutput,
    graph: Graph,
) -> ComponentOutput:
    """Enumerate single-pattern candidates and keep the best KG-supported one.

    Boolean questions become ASK, everything else a one-variable SELECT.
    Candidates are ranked by whether the graph satisfies them, then by
    enumeration order.
    """
    ents = [link.entity for link in (entities.payload or ())]
    rels = [link.predicate for link in (relations.payload or ())]
    if not ents or not rels:
        return ComponentOutput(task=QB, payload=None)

    is_boolean = answer_type(question) == "boolean"
    var = Variable(ANSWER_VARIABLE)
    candidates: list[TriplePattern] = []
    if is_boolean and len(ents) >= 2:
        for e1, e2 in zip(ents, ents[1:]):
            for p in rels:
                candidates.append(TriplePattern(e1, p, e2))
                candidates.append(TriplePattern(e2, p, e1))
    for e in ents:
        for p in rels:
            candidates.append(TriplePattern(e, p, var))
            candidates.append(TriplePattern(var, p, e))

    def satisfied(pattern: TriplePattern) -> bool:
        probe = Query(form=ASK, patterns=(pattern,))
        return bool(evaluate(graph, probe).boolean)

    best = min(enumerate(candidates), key=lambda item: (not satisfied(item[1]), item[0]))[1]
    if is_boolean:
        query = Query(form=ASK, patterns=(best,))
    else:
        query = Query(form=SELECT, patterns=(best,), projection=(ANSWER_VARIABLE,))
    return ComponentOutput(task=QB, payload=query)
