"""RDF term model and a line-oriented N-Triples reader/writer.

Only the features needed for DBpedia-style entity/relation data are
supported: IRIs and literals. Blank nodes are rejected explicitly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

RDFS_LABEL = "http://www.w3.org/2000/01/rdf-schema#label"

_SCHEME_RE = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*:")
# IRIREF forbids controls, space and a handful of delimiters.
_BAD_IRI_CHARS = re.compile(r'[\x00-\x20<>"{}|^`\\]')
_LANGTAG_RE = re.compile(r"[A-Za-z]+(-[A-Za-z0-9]+)*$")


class NTriplesError(ValueError):
    """Malformed N-Triples input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedFeatureError(NTriplesError):
    """Syntactically valid N-Triples feature outside the supported subset."""


@dataclass(frozen=True, slots=True, order=True)
class Iri:
    value: str

    def __post_init__(self):
        if not self.value:
            raise ValueError("IRI must be non-empty")
        if not _SCHEME_RE.match(self.value):
            raise ValueError(f"IRI must be absolute: {self.value!r}")
        if _BAD_IRI_CHARS.search(self.value):
            raise ValueError(f"IRI contains characters outside the IRIREF grammar: {self.value!r}")

    def local_name(self) -> str:
        cut = max(self.value.rfind("/"), self.value.rfind("#"))
        return self.value[cut + 1 :]

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True, order=True)
class Literal:
    lexical_form: str
    datatype: Iri | None = None
    language: str | None = None

    def __post_init__(self):
        if self.datatype is not None and self.language is not None:
            raise ValueError("literal cannot carry both a datatype and a language tag")
        if self.language is not None and not _LANGTAG_RE.match(self.language):
            raise ValueError(f"malformed language tag: {self.language!r}")

    def __str__(self) -> str:
        return self.lexical_form


Term = Iri | Literal


@dataclass(frozen=True, slots=True, order=True)
class Triple:
    subject: Iri
    predicate: Iri
    object: Term

    def __post_init__(self):
        if not isinstance(self.subject, Iri):
            raise ValueError("triple subject must be an IRI")
        if not isinstance(self.predicate, Iri):
            raise ValueError("triple predicate must be an IRI")
        if not isinstance(self.object, (Iri, Literal)):
            raise ValueError("triple object must be an IRI or a literal")


_ECHAR_DECODE = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_ECHAR_ENCODE = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


class _LineScanner:
    """Cursor over a single statement line."""

    def __init__(self, text: str, line_no: int):
        self.text = text
        self.pos = 0
        self.line_no = line_no

    def error(self, message: str) -> NTriplesError:
        return NTriplesError(message, self.line_no)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text) or self.text[self.pos] == "#"

    def peek(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("unexpected end of statement")
        return self.text[self.pos]

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}, found {self.text[self.pos]!r}")
        self.pos += 1

    def _unescape(self, raw: str, allow_echar: bool) -> str:
        out = []
        i = 0
        while i < len(raw):
            ch = raw[i]
            if ch != "\\":
                out.append(ch)
                i += 1
                continue
            if i + 1 >= len(raw):
                raise self.error("dangling escape")
            esc = raw[i + 1]
            if esc == "u" or esc == "U":
                width = 4 if esc == "u" else 8
                hexpart = raw[i + 2 : i + 2 + width]
                if len(hexpart) != width or not re.fullmatch(r"[0-9A-Fa-f]+", hexpart):
                    raise self.error(f"malformed \\{esc} escape")
                out.append(chr(int(hexpart, 16)))
                i += 2 + width
            elif allow_echar and esc in _ECHAR_DECODE:
                out.append(_ECHAR_DECODE[esc])
                i += 2
            else:
                raise self.error(f"invalid escape \\{esc}")
        return "".join(out)

    def read_iri(self) -> Iri:
        self.expect("<")
        end = self.text.find(">", self.pos)
        if end < 0:
            raise self.error("unterminated IRI")
        raw = self.text[self.pos : end]
        self.pos = end + 1
        value = self._unescape(raw, allow_echar=False)
        try:
            return Iri(value)
        except ValueError as exc:
            raise self.error(str(exc)) from exc

    def read_literal(self) -> Literal:
        self.expect('"')
        out = []
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated literal")
            ch = self.text[self.pos]
            if ch == '"':
                self.pos += 1
                break
            if ch == "\\":
                chunk_end = self.pos + 2
                if self.pos + 1 < len(self.text) and self.text[self.pos + 1] in "uU":
                    chunk_end += 4 if self.text[self.pos + 1] == "u" else 8
                out.append(self._unescape(self.text[self.pos : chunk_end], allow_echar=True))
                self.pos = chunk_end
            else:
                out.append(ch)
                self.pos += 1
        lexical = "".join(out)
        if self.pos < len(self.text) and self.text[self.pos] == "@":
            self.pos += 1
            m = re.match(r"[A-Za-z]+(-[A-Za-z0-9]+)*", self.text[self.pos :])
            if not m:
                raise self.error("malformed language tag")
            self.pos += m.end()
            return Literal(lexical, language=m.group(0))
        if self.text[self.pos : self.pos + 2] == "^^":
            self.pos += 2
            return Literal(lexical, datatype=self.read_iri())
        return Literal(lexical)

    def read_term(self, position: str) -> Term:
        ch = self.peek()
        if ch == "<":
            return self.read_iri()
        if ch == '"':
            if position != "object":
                raise self.error(f"literal not allowed as {position}")
            return self.read_literal()
        if ch == "_":
            raise UnsupportedFeatureError("blank nodes are not supported", self.line_no)
        raise self.error(f"unexpected character {ch!r} at {position}")


def parse_ntriples(text: str) -> list[Triple]:
    """Parse an N-Triples document into a list of triples (duplicates kept).

    Lines are separated by LF or CRLF only; other Unicode line breaks are
    literal content.
    """
    triples = []
    for line_no, raw_line in enumerate(text.split("\n"), start=1):
        line = raw_line.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        scanner = _LineScanner(line, line_no)
        subject = scanner.read_term("subject")
        predicate = scanner.read_term("predicate")
        if not isinstance(predicate, Iri):
            raise NTriplesError("predicate must be an IRI", line_no)
        obj = scanner.read_term("object")
        scanner.expect(".")
        if not scanner.at_end():
            raise NTriplesError("trailing content after '.'", line_no)
        triples.append(Triple(subject, predicate, obj))  # type: ignore[arg-type]
    return triples


def _escape_literal(value: str) -> str:
    out = []
    for ch in value:
        if ch in _ECHAR_ENCODE:
            out.append(_ECHAR_ENCODE[ch])
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def term_to_ntriples(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    body = f'"{_escape_literal(term.lexical_form)}"'
    if term.language is not None:
        return f"{body}@{term.language}"
    if term.datatype is not None:
        return f"{body}^^<{term.datatype.value}>"
    return body


def triple_to_ntriples(triple: Triple) -> str:
    return (
        f"{term_to_ntriples(triple.subject)} "
        f"{term_to_ntriples(triple.predicate)} "
        f"{term_to_ntriples(triple.object)} ."
    )


def serialize_ntriples(triples) -> str:
    """Canonical serialization: sorted unique statement lines."""
    lines = sorted({triple_to_ntriples(t) for t in triples})
    return "".join(line + "\n" for line in lines)
