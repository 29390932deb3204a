import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kgqa_explain.questions import (
    ANSWER_TYPES,
    DEFAULT_SCHEMA,
    HEADWORDS,
    POS_TAGS,
    FeatureVector,
    answer_type,
    extract_features,
    headword,
    make_question,
    pos_tag,
    tokenize,
)

TESLA = "Did Tesla win a nobel prize in physics?"
FINLAND = "What is the capital of Finland?"


def test_tokenize_tesla_question():
    tokens = tokenize(TESLA)
    assert len(tokens) == 9
    assert tokens[-1] == "?"
    assert tokens[:3] == ["Did", "Tesla", "win"]


def test_tokenize_single_token():
    assert tokenize("A") == ["A"]


def test_tokenize_finland_question():
    tokens = tokenize(FINLAND)
    assert len(tokens) == 7
    assert tokens == ["What", "is", "the", "capital", "of", "Finland", "?"]


def test_tokenize_detaches_each_trailing_punct():
    assert tokenize("Really?!") == ["Really", "?", "!"]
    assert tokenize("Paris, Texas") == ["Paris", ",", "Texas"]


def test_pos_tag_tesla():
    tokens = tokenize(TESLA)
    tags = pos_tag(tokens)
    by_token = dict(zip(tokens, tags))
    assert by_token["Did"] == "AUX"
    assert by_token["Tesla"] == "PROPN"
    assert by_token["win"] == "VERB"
    assert by_token["a"] == "DET"
    assert by_token["in"] == "ADP"
    assert by_token["?"] == "PUNCT"


def test_pos_tag_closed_class_and_digits():
    assert pos_tag(["who"]) == ["WH"]
    assert pos_tag(["7"]) == ["NUM"]
    assert pos_tag(["quickly"]) == ["ADV"]


def test_pos_tag_ed_after_auxiliary():
    # "located" is only a verb once an auxiliary has appeared
    assert pos_tag(["Where", "is", "it", "located"])[-1] == "VERB"
    assert pos_tag(["located"])[-1] == "NOUN"


def test_pos_tag_capitalized_non_initial_is_propn():
    tags = pos_tag(["Berlin", "is", "in", "Germany"])
    assert tags[0] != "PROPN"  # sentence-initial capitalization is ignored
    assert tags[3] == "PROPN"


def test_headword_values():
    assert headword(make_question(FINLAND)) == "what"
    assert headword(make_question(TESLA)) == "boolean-aux"
    assert headword(make_question("List all rivers.")) == "other"


def test_answer_type_precedence():
    assert answer_type(make_question(TESLA)) == "boolean"
    assert answer_type(make_question("How many people live in Japan?")) == "number"
    assert answer_type(make_question(FINLAND)) == "other"
    assert answer_type(make_question("List the languages spoken in Canada.")) == "list"
    assert answer_type(make_question("Which rivers flow through Egypt?")) == "list"


def test_extract_features_tesla():
    fv = extract_features(make_question(TESLA))
    named = dict(zip(fv.schema, fv.values))
    assert named["len_6_8"] == 1  # 8 word tokens, "?" excluded
    assert named["hw_boolean_aux"] == 1
    assert named["ans_boolean"] == 1
    assert named["pos_PROPN"] == 1


def test_extract_features_minimal_question():
    fv = extract_features(make_question("Who?"))
    named = dict(zip(fv.schema, fv.values))
    assert named["len_le5"] == 1
    assert named["hw_who"] == 1
    assert named["pos_WH"] == 1
    assert named["pos_VERB"] == 0
    assert named["pos_NOUN"] == 0


def test_schema_shape():
    assert len(DEFAULT_SCHEMA) == 28
    assert len(DEFAULT_SCHEMA) == 3 + len(HEADWORDS) + len(ANSWER_TYPES) + len(POS_TAGS)


def test_feature_vector_invariants():
    with pytest.raises(ValueError):
        FeatureVector(schema=("a", "b"), values=(1,))
    with pytest.raises(ValueError):
        FeatureVector(schema=("a",), values=(2,))


question_text = st.text(
    alphabet=st.characters(whitelist_categories=("Lu", "Ll", "Nd"), whitelist_characters=" ?!,."),
    min_size=1,
    max_size=60,
).filter(lambda s: s.split())


@settings(max_examples=200)
@given(question_text)
def test_one_hot_groups_and_binary_values(text):
    fv = extract_features(make_question(text))
    assert len(fv.values) == len(fv.schema) == 28
    assert all(v in (0, 1) for v in fv.values)
    assert sum(fv.values[0:3]) == 1  # length buckets
    assert sum(fv.values[3:11]) == 1  # headword flags
    assert sum(fv.values[11:15]) == 1  # answer-type flags


@given(question_text)
def test_extraction_is_pure(text):
    a = extract_features(make_question(text, qid="a"))
    b = extract_features(make_question(text, qid="b"))
    assert a == b
