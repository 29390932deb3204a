"""In-memory triple store with a surface-form index and a reloadable snapshot."""

from __future__ import annotations

import string
from pathlib import Path

from .rdf import (
    RDFS_LABEL,
    Iri,
    Literal,
    NTriplesError,
    Term,
    Triple,
    parse_ntriples,
    serialize_ntriples,
)

SNAPSHOT_MAGIC = "# kgqa-store v1"


def normalize_surface_form(phrase: str) -> str:
    """Lower-case, collapse whitespace, strip surrounding punctuation."""
    collapsed = " ".join(phrase.lower().split())
    return collapsed.strip(string.punctuation + " ")


class Graph:
    """Immutable set of triples plus spo/pos/osp indexes and a label index.

    The label index maps normalized surface forms to the IRIs they name,
    built from triples whose predicate is one of ``label_predicates`` and
    whose object is a literal.
    """

    def __init__(self, triples, label_predicates: tuple[Iri, ...] = (Iri(RDFS_LABEL),)):
        self.label_predicates = tuple(label_predicates)
        self.triples: frozenset[Triple] = frozenset(triples)
        self.spo: dict[Iri, dict[Iri, set[Term]]] = {}
        self.pos: dict[Iri, dict[Term, set[Iri]]] = {}
        self.osp: dict[Term, dict[Iri, set[Iri]]] = {}
        self.label_index: dict[str, set[Iri]] = {}
        for t in self.triples:
            self.spo.setdefault(t.subject, {}).setdefault(t.predicate, set()).add(t.object)
            self.pos.setdefault(t.predicate, {}).setdefault(t.object, set()).add(t.subject)
            self.osp.setdefault(t.object, {}).setdefault(t.subject, set()).add(t.predicate)
            if t.predicate in self.label_predicates and isinstance(t.object, Literal):
                key = normalize_surface_form(t.object.lexical_form)
                if key:
                    self.label_index.setdefault(key, set()).add(t.subject)

    def __len__(self) -> int:
        return len(self.triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self.triples

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.triples == other.triples
            and self.label_predicates == other.label_predicates
        )

    def __hash__(self):
        return hash((self.triples, self.label_predicates))

    def terms(self) -> set[Term]:
        out: set[Term] = set()
        for t in self.triples:
            out.add(t.subject)
            out.add(t.predicate)
            out.add(t.object)
        return out

    def predicates(self) -> set[Iri]:
        return set(self.pos)

    def objects(self, subject: Iri, predicate: Iri) -> set[Term]:
        return self.spo.get(subject, {}).get(predicate, set())


def load_ntriples(text: str, label_predicates: tuple[Iri, ...] = (Iri(RDFS_LABEL),)) -> Graph:
    """Build a graph from an N-Triples document; duplicate statements collapse."""
    return Graph(parse_ntriples(text), label_predicates=label_predicates)


def lookup_surface_form(graph: Graph, phrase: str) -> set[Iri]:
    """IRIs whose normalized label equals the normalized phrase."""
    if not phrase:
        raise ValueError("phrase must be non-empty")
    return set(graph.label_index.get(normalize_surface_form(phrase), set()))


def snapshot_bytes(graph: Graph) -> bytes:
    labels = " ".join(f"<{p.value}>" for p in graph.label_predicates)
    body = SNAPSHOT_MAGIC + "\n" + f"# labels {labels}\n" + serialize_ntriples(graph.triples)
    return body.encode("utf-8")


def save_graph(graph: Graph, path: str | Path) -> None:
    """Write a reloadable snapshot. Canonical layout, so saves round-trip bit-exactly."""
    Path(path).write_bytes(snapshot_bytes(graph))


def load_graph(path: str | Path) -> Graph:
    """Reload a snapshot written by :func:`save_graph`, or a plain .nt file."""
    text = Path(path).read_text(encoding="utf-8")
    label_predicates = (Iri(RDFS_LABEL),)
    lines = text.split("\n")
    if lines and lines[0] == SNAPSHOT_MAGIC:
        if len(lines) < 2 or not lines[1].startswith("# labels"):
            raise NTriplesError("snapshot missing label-predicate header", line=2)
        spec = lines[1][len("# labels") :].split()
        label_predicates = tuple(Iri(item.strip("<>")) for item in spec)
        text = "\n".join(lines[2:])
    return load_ntriples(text, label_predicates=label_predicates)
