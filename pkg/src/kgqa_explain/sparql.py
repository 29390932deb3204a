"""ASK/SELECT over conjunctive basic graph patterns.

This is deliberately a small subset: no FILTER, OPTIONAL, UNION,
aggregates or property paths. Queries outside the subset raise
:class:`UnsupportedQueryError` when parsed from text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .graph import Graph
from .rdf import Iri, Literal, Term, term_to_ntriples

ASK = "ASK"
SELECT = "SELECT"


class QueryError(ValueError):
    pass


class UnsupportedQueryError(QueryError):
    """Query text is SPARQL, but outside the supported ASK/SELECT BGP subset."""


@dataclass(frozen=True, slots=True, order=True)
class Variable:
    name: str

    def __post_init__(self):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", self.name):
            raise QueryError(f"malformed variable name: {self.name!r}")

    def __str__(self) -> str:
        return "?" + self.name


PatternTerm = Iri | Literal | Variable


@dataclass(frozen=True, slots=True)
class TriplePattern:
    subject: PatternTerm
    predicate: PatternTerm
    object: PatternTerm

    def positions(self) -> tuple[PatternTerm, PatternTerm, PatternTerm]:
        return (self.subject, self.predicate, self.object)

    def variables(self) -> set[str]:
        return {t.name for t in self.positions() if isinstance(t, Variable)}


@dataclass(frozen=True)
class Query:
    form: str
    patterns: tuple[TriplePattern, ...]
    projection: tuple[str, ...] = ()

    def __post_init__(self):
        if self.form not in (ASK, SELECT):
            raise QueryError(f"unknown query form: {self.form!r}")
        if not self.patterns:
            raise QueryError("query must have at least one triple pattern")
        if self.form == ASK and self.projection:
            raise QueryError("ASK queries have no projection")
        if self.form == SELECT and not self.projection:
            raise QueryError("SELECT queries must project at least one variable")
        in_patterns = set().union(*(p.variables() for p in self.patterns))
        missing = [v for v in self.projection if v not in in_patterns]
        if missing:
            raise QueryError(f"projected variables not used in any pattern: {missing}")

    def variables(self) -> set[str]:
        return set().union(*(p.variables() for p in self.patterns))


# A solution row is the projected terms in projection order.
Row = tuple[Term, ...]


@dataclass(frozen=True)
class AnswerSet:
    form: str
    boolean: bool | None = None
    variables: tuple[str, ...] = ()
    rows: frozenset[Row] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.form == ASK and self.boolean is None:
            raise QueryError("ASK answer needs a boolean")
        if self.form == SELECT and self.boolean is not None:
            raise QueryError("SELECT answer has no boolean")

    @property
    def empty(self) -> bool:
        """No usable result. ASK always yields an answer (true or false)."""
        return self.form == SELECT and not self.rows

    def bindings(self) -> list[dict[str, Term]]:
        return [dict(zip(self.variables, row)) for row in sorted(self.rows)]


def _substitute(pattern: TriplePattern, binding: dict[str, Term]) -> TriplePattern:
    def sub(t: PatternTerm) -> PatternTerm:
        if isinstance(t, Variable) and t.name in binding:
            return binding[t.name]
        return t

    return TriplePattern(sub(pattern.subject), sub(pattern.predicate), sub(pattern.object))


def _match_pattern(graph: Graph, pattern: TriplePattern):
    """Yield (s, p, o) triples of the graph matching the pattern's constants."""
    s, p, o = pattern.positions()
    s_const = not isinstance(s, Variable)
    p_const = not isinstance(p, Variable)
    o_const = not isinstance(o, Variable)
    if s_const and not isinstance(s, Iri):
        return
    if p_const and not isinstance(p, Iri):
        return
    if s_const and p_const:
        for obj in graph.spo.get(s, {}).get(p, ()):  # type: ignore[arg-type]
            if not o_const or obj == o:
                yield s, p, obj
    elif s_const:
        for pred, objs in graph.spo.get(s, {}).items():  # type: ignore[arg-type]
            for obj in objs:
                if not o_const or obj == o:
                    yield s, pred, obj
    elif p_const and o_const:
        for subj in graph.pos.get(p, {}).get(o, ()):  # type: ignore[arg-type]
            yield subj, p, o
    elif p_const:
        for obj, subjs in graph.pos.get(p, {}).items():  # type: ignore[arg-type]
            for subj in subjs:
                yield subj, p, obj
    elif o_const:
        for subj, preds in graph.osp.get(o, {}).items():
            for pred in preds:
                yield subj, pred, o
    else:
        for t in graph.triples:
            yield t.subject, t.predicate, t.object


def _solutions(graph: Graph, patterns, binding: dict[str, Term], stop_at_first: bool):
    if not patterns:
        yield dict(binding)
        return
    head, rest = patterns[0], patterns[1:]
    bound = _substitute(head, binding)
    names = (
        head.subject.name if isinstance(head.subject, Variable) else None,
        head.predicate.name if isinstance(head.predicate, Variable) else None,
        head.object.name if isinstance(head.object, Variable) else None,
    )
    for s, p, o in _match_pattern(graph, bound):
        extended = dict(binding)
        consistent = True
        for name, value in zip(names, (s, p, o)):
            if name is None:
                continue
            if name in extended and extended[name] != value:
                consistent = False
                break
            extended[name] = value
        if not consistent:
            continue
        for solution in _solutions(graph, rest, extended, stop_at_first):
            yield solution
            if stop_at_first:
                return


def evaluate(graph: Graph, query: Query) -> AnswerSet:
    """Evaluate a query; shared variables join across patterns.

    Empty results are answers, not errors: ASK yields false, SELECT an
    empty row set.
    """
    if query.form == ASK:
        found = next(_solutions(graph, query.patterns, {}, stop_at_first=True), None)
        return AnswerSet(form=ASK, boolean=found is not None)
    rows = {
        tuple(solution[name] for name in query.projection)
        for solution in _solutions(graph, query.patterns, {}, stop_at_first=False)
    }
    return AnswerSet(form=SELECT, variables=query.projection, rows=frozenset(rows))


def pattern_term_to_text(term: PatternTerm, prefixes: dict[str, str] | None = None) -> str:
    if isinstance(term, Variable):
        return str(term)
    if isinstance(term, Iri) and prefixes:
        for prefix, base in prefixes.items():
            if term.value.startswith(base):
                local = term.value[len(base) :]
                if re.fullmatch(r"[A-Za-z0-9_\-.]*", local):
                    return f"{prefix}:{local}"
    return term_to_ntriples(term)


def query_to_text(query: Query, prefixes: dict[str, str] | None = None) -> str:
    """Render a query as SPARQL text (spaces kept inside braces)."""
    patterns = " ".join(
        " ".join(pattern_term_to_text(t, prefixes) for t in p.positions()) + " ."
        for p in query.patterns
    )
    if query.form == ASK:
        return f"ASK {{ {patterns} }}"
    projection = " ".join("?" + v for v in query.projection)
    return f"SELECT {projection} WHERE {{ {patterns} }}"


_UNSUPPORTED_KEYWORDS = re.compile(
    r"\b(FILTER|OPTIONAL|UNION|GROUP\s+BY|ORDER\s+BY|LIMIT|OFFSET|COUNT|MINUS|HAVING|SERVICE|VALUES|CONSTRUCT|DESCRIBE|BIND)\b",
    re.IGNORECASE,
)

_TOKEN_RE = re.compile(
    r"""\s*(?:
        (?P<iri><[^>]*>)
      | (?P<literal>"(?:[^"\\]|\\.)*"(?:@[A-Za-z]+(?:-[A-Za-z0-9]+)*|\^\^<[^>]*>)?)
      | (?P<var>\?[A-Za-z_][A-Za-z0-9_]*)
      | (?P<pname>[A-Za-z][A-Za-z0-9_\-]*:[A-Za-z0-9_\-.]*)
      | (?P<punct>[{}.;])
      | (?P<word>[A-Za-z]+)
    )""",
    re.VERBOSE,
)


def _tokenize_sparql(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            remainder = text[pos:].strip()
            if not remainder:
                break
            raise QueryError(f"cannot tokenize query near {remainder[:30]!r}")
        tokens.append(m.group(0).strip())
        pos = m.end()
    return [t for t in tokens if t]


_LITERAL_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


def _unescape_literal(body: str) -> str:
    out = []
    i = 0
    while i < len(body):
        ch = body[i]
        if ch == "\\" and i + 1 < len(body):
            esc = body[i + 1]
            if esc in _LITERAL_ESCAPES:
                out.append(_LITERAL_ESCAPES[esc])
                i += 2
                continue
            if esc in "uU":
                width = 4 if esc == "u" else 8
                out.append(chr(int(body[i + 2 : i + 2 + width], 16)))
                i += 2 + width
                continue
        out.append(ch)
        i += 1
    return "".join(out)


def _parse_term(token: str, prefixes: dict[str, str]) -> PatternTerm:
    if token.startswith("?"):
        return Variable(token[1:])
    if token.startswith("<"):
        return Iri(token[1:-1])
    if token.startswith('"'):
        body, _, suffix = token[1:].rpartition('"')
        lexical = _unescape_literal(body)
        if suffix.startswith("@"):
            return Literal(lexical, language=suffix[1:])
        if suffix.startswith("^^<"):
            return Literal(lexical, datatype=Iri(suffix[3:-1]))
        return Literal(lexical)
    if ":" in token:
        prefix, _, local = token.partition(":")
        if prefix not in prefixes:
            raise QueryError(f"unknown prefix {prefix!r}")
        return Iri(prefixes[prefix] + local)
    raise QueryError(f"cannot parse term {token!r}")


def parse_query(text: str, prefixes: dict[str, str] | None = None) -> Query:
    """Parse SPARQL text restricted to the ASK/SELECT BGP subset."""
    masked = re.sub(r'"(?:[^"\\]|\\.)*"', '""', text)
    keyword = _UNSUPPORTED_KEYWORDS.search(masked)
    if keyword:
        raise UnsupportedQueryError(f"unsupported SPARQL feature: {keyword.group(0)}")
    if "(" in masked or "[" in masked:
        raise UnsupportedQueryError("unsupported bracketed syntax")
    prefixes = dict(prefixes or {})
    tokens = _tokenize_sparql(text)
    if not tokens:
        raise QueryError("empty query")
    pos = 0
    while pos < len(tokens) and tokens[pos].upper() == "PREFIX":
        if pos + 2 >= len(tokens) or not tokens[pos + 1].endswith(":") or not tokens[pos + 2].startswith("<"):
            raise QueryError("malformed PREFIX declaration")
        prefixes[tokens[pos + 1][:-1]] = tokens[pos + 2][1:-1]
        pos += 3
    if pos >= len(tokens):
        raise QueryError("query has no body")
    form_word = tokens[pos].upper()
    pos += 1
    projection: list[str] = []
    if form_word == "ASK":
        form = ASK
    elif form_word == "SELECT":
        form = SELECT
        if pos < len(tokens) and tokens[pos].upper() == "DISTINCT":
            pos += 1
        while pos < len(tokens) and tokens[pos].startswith("?"):
            projection.append(tokens[pos][1:])
            pos += 1
        if pos < len(tokens) and tokens[pos].upper() == "WHERE":
            pos += 1
    else:
        raise UnsupportedQueryError(f"unsupported query form: {form_word}")
    if form == ASK and pos < len(tokens) and tokens[pos].upper() == "WHERE":
        pos += 1
    if pos >= len(tokens) or tokens[pos] != "{":
        raise QueryError("expected '{' opening the graph pattern")
    pos += 1
    patterns: list[TriplePattern] = []
    current: list[PatternTerm] = []
    while pos < len(tokens) and tokens[pos] != "}":
        token = tokens[pos]
        if token == ".":
            if current:
                raise QueryError("incomplete triple pattern before '.'")
            pos += 1
            continue
        if token in "{;":
            raise UnsupportedQueryError(f"unsupported group syntax: {token!r}")
        current.append(_parse_term(token, prefixes))
        if len(current) == 3:
            patterns.append(TriplePattern(*current))
            current = []
        pos += 1
    if pos >= len(tokens):
        raise QueryError("unterminated graph pattern")
    if current:
        raise QueryError("incomplete triple pattern at end of group")
    pos += 1
    if pos != len(tokens):
        raise QueryError(f"trailing content after '}}': {tokens[pos:]}")
    return Query(form=form, patterns=tuple(patterns), projection=tuple(projection))


def answer_key_set(answers: AnswerSet) -> set:
    """Comparable view of an answer set, independent of variable naming."""
    if answers.form == ASK:
        return {("ask", answers.boolean)}
    return set(answers.rows)
