"""Question tokenization, rule-based POS tagging, and binary feature extraction.

Everything here is deterministic on purpose: the same question text always
produces the same tokens, tags, and feature vector, which keeps trained
models and downstream tests reproducible.
"""

from __future__ import annotations

import hashlib
import string
from dataclasses import dataclass, field

POS_TAGS = (
    "NOUN",
    "PROPN",
    "VERB",
    "ADJ",
    "ADV",
    "PRON",
    "DET",
    "ADP",
    "NUM",
    "AUX",
    "WH",
    "PUNCT",
    "OTHER",
)

HEADWORDS = ("who", "what", "which", "when", "where", "how", "boolean-aux", "other")
ANSWER_TYPES = ("boolean", "number", "list", "other")

WH_WORDS = frozenset({"who", "whom", "whose", "what", "which", "when", "where", "why", "how"})
DETERMINERS = frozenset(
    "a an the this that these those some any no each every either neither all both".split()
)
ADPOSITIONS = frozenset(
    (
        "of in on at by for with from to into onto over under through between during about "
        "against among across behind beyond near since until within without along around off "
        "above below up down than as per"
    ).split()
)
AUXILIARIES = frozenset(
    (
        "is are was were am be been being do does did have has had can could will would "
        "shall should may might must"
    ).split()
)
PRONOUNS = frozenset(
    (
        "i you he she it we they me him her us them my your his its our their mine yours "
        "hers ours theirs myself yourself himself herself itself ourselves themselves"
    ).split()
)
# Small open-class lexicon for bare verb forms common in KG questions; the
# suffix rules below only catch -ing/-ed forms.
VERB_LEXICON = frozenset(
    (
        "win wins won write writes wrote written direct directs play plays live lives die "
        "dies flow flows speak speaks spoke spoken marry marries star stars make makes made "
        "found create creates locate belong belongs know knows produce produces border "
        "borders run runs begin begins develop develops design designs invent invents build "
        "builds compose composes paint paints discover discovers rule rules lead leads own "
        "owns contain contains"
    ).split()
)
ADJECTIVES = frozenset(
    (
        "many much few several large small big long short high low old new first last famous "
        "total official main native major minor"
    ).split()
)

BOOLEAN_AUXILIARIES = AUXILIARIES
LIST_IMPERATIVES = frozenset({"list", "give", "show", "name"})
COUNT_CUES = ("how many", "total number")

_PUNCT_CHARS = set(string.punctuation)


@dataclass(frozen=True)
class Question:
    id: str
    text: str
    tokens: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.text:
            raise ValueError("question text must be non-empty")
        object.__setattr__(self, "tokens", tuple(tokenize(self.text)))


def make_question(text: str, qid: str | None = None) -> Question:
    if qid is None:
        qid = hashlib.sha1(text.encode("utf-8")).hexdigest()[:12]
    return Question(id=qid, text=text)


def tokenize(text: str) -> list[str]:
    """Whitespace split with trailing punctuation detached, casing preserved."""
    if not text:
        raise ValueError("text must be non-empty")
    tokens: list[str] = []
    for raw in text.split():
        tail: list[str] = []
        while raw and raw[-1] in _PUNCT_CHARS:
            tail.append(raw[-1])
            raw = raw[:-1]
        if raw:
            tokens.append(raw)
        tokens.extend(reversed(tail))
    return tokens


def _is_number_token(token: str) -> bool:
    stripped = token.replace(",", "").replace(".", "")
    return bool(stripped) and stripped.isdigit() and token[0].isdigit()


def pos_tag(tokens) -> list[str]:
    """Lexicon-first tagging over the closed tag set; fallback is NOUN."""
    tags: list[str] = []
    seen_aux = False
    for i, token in enumerate(tokens):
        low = token.lower()
        if low in WH_WORDS:
            tag = "WH"
        elif low in DETERMINERS:
            tag = "DET"
        elif low in ADPOSITIONS:
            tag = "ADP"
        elif low in AUXILIARIES:
            tag = "AUX"
        elif low in PRONOUNS:
            tag = "PRON"
        elif _is_number_token(token):
            tag = "NUM"
        elif all(ch in _PUNCT_CHARS for ch in token):
            tag = "PUNCT"
        elif i > 0 and token[0].isupper():
            tag = "PROPN"
        elif low in VERB_LEXICON:
            tag = "VERB"
        elif low in ADJECTIVES:
            tag = "ADJ"
        elif low.endswith("ly") and len(low) > 3:
            tag = "ADV"
        elif seen_aux and (low.endswith("ing") or low.endswith("ed")):
            tag = "VERB"
        elif any(ch.isalpha() for ch in token):
            tag = "NOUN"
        else:
            tag = "OTHER"
        if tag == "AUX":
            seen_aux = True
        tags.append(tag)
    return tags


def headword(question: Question) -> str:
    first = question.tokens[0].lower() if question.tokens else ""
    if first in ("who", "what", "which", "when", "where", "how"):
        return first
    if first in BOOLEAN_AUXILIARIES:
        return "boolean-aux"
    return "other"


def _is_plural_noun(token: str) -> bool:
    low = token.lower()
    return low.endswith("s") and not low.endswith(("ss", "us", "is"))


def answer_type(question: Question) -> str:
    """Expected answer shape; precedence boolean > number > list > other."""
    tokens = question.tokens
    hw = headword(question)
    if hw == "boolean-aux":
        return "boolean"
    lowered = question.text.lower()
    if hw == "how" and len(tokens) > 1 and tokens[1].lower() in ("many", "much"):
        return "number"
    if any(lowered.startswith(cue) for cue in COUNT_CUES):
        return "number"
    if tokens and tokens[0].lower() in LIST_IMPERATIVES:
        return "list"
    if hw in ("who", "what", "which"):
        tags = pos_tag(tokens)
        for token, tag in zip(tokens[1:], tags[1:]):
            if tag in ("NOUN", "PROPN"):
                if tag == "NOUN" and _is_plural_noun(token):
                    return "list"
                break
    return "other"


SCHEMA_VERSION = "qa-features-v1"

DEFAULT_SCHEMA: tuple[str, ...] = (
    ("len_le5", "len_6_8", "len_ge9")
    + tuple(f"hw_{h.replace('-', '_')}" for h in HEADWORDS)
    + tuple(f"ans_{a}" for a in ANSWER_TYPES)
    + tuple(f"pos_{t}" for t in POS_TAGS)
)


@dataclass(frozen=True)
class FeatureVector:
    schema: tuple[str, ...]
    values: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.values) != len(self.schema):
            raise ValueError("feature vector length must equal schema length")
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("feature values must be binary")


def extract_features(question: Question) -> FeatureVector:
    """28 binary indicators: length bucket, headword, answer type, POS presence."""
    tokens = question.tokens
    tags = pos_tag(tokens)

    word_count = len(tokens)
    while word_count > 0 and tags[word_count - 1] == "PUNCT":
        word_count -= 1
    length_flags = [int(word_count <= 5), int(6 <= word_count <= 8), int(word_count >= 9)]

    hw = headword(question)
    hw_flags = [int(hw == h) for h in HEADWORDS]

    at = answer_type(question)
    at_flags = [int(at == a) for a in ANSWER_TYPES]

    present = set(tags)
    pos_flags = [int(t in present) for t in POS_TAGS]

    values = tuple(length_flags + hw_flags + at_flags + pos_flags)
    return FeatureVector(schema=DEFAULT_SCHEMA, values=values)
