import pytest

from kgqa_explain.components import (
    NED,
    QB,
    RL,
    ComponentOutput,
    build_query,
    link_entities,
    link_relations,
    parse_synonyms,
)
from kgqa_explain.graph import Graph, lookup_surface_form
from kgqa_explain.questions import answer_type, make_question
from kgqa_explain.rdf import RDFS_LABEL, Iri, Literal, Triple
from kgqa_explain.sparql import ASK, SELECT, TriplePattern, Variable, evaluate

DBR = "http://dbpedia.org/resource/"
DBO = "http://dbpedia.org/ontology/"
LABEL = Iri(RDFS_LABEL)

TESLA_Q = "Did Tesla win a nobel prize in physics?"


def test_link_entities_tesla(desk_graph):
    output = link_entities(make_question(TESLA_Q), desk_graph)
    assert output.task == NED
    assert [link.entity for link in output.payload] == [
        Iri(DBR + "Nikola_Tesla"),
        Iri(DBR + "Nobel_Prize_in_Physics"),
    ]
    assert [link.text for link in output.payload] == ["Tesla", "nobel prize in physics"]
    assert [link.score for link in output.payload] == [1, 4]


def test_link_entities_no_match(desk_graph):
    output = link_entities(make_question("zzz florp wibble?"), desk_graph)
    assert output.empty
    assert output.payload == ()


def test_ambiguous_surface_form_tie_break():
    graph = Graph(
        [
            Triple(Iri(DBR + "Paris"), LABEL, Literal("Paris")),
            Triple(Iri(DBR + "Paris_Texas"), LABEL, Literal("Paris")),
        ]
    )
    output = link_entities(make_question("Paris"), graph)
    assert [link.entity for link in output.payload] == [Iri(DBR + "Paris")]


def test_spans_never_overlap(desk_graph, desk_dataset):
    for record in desk_dataset.records:
        output = link_entities(record.question, desk_graph)
        taken = set()
        for link in output.payload:
            assert 0 <= link.start < link.end <= len(record.question.tokens)
            span = set(range(link.start, link.end))
            assert not span & taken
            taken |= span


def test_single_token_question_reduces_to_lookup():
    graph = Graph(
        [
            Triple(Iri(DBR + "Berlin"), LABEL, Literal("Berlin")),
            Triple(Iri(DBR + "Berlin"), Iri(DBO + "population"), Literal("3645000")),
        ]
    )
    output = link_entities(make_question("Berlin"), graph)
    assert {link.entity for link in output.payload} == lookup_surface_form(graph, "Berlin")


def test_property_labels_are_not_entities(desk_graph):
    # "population" labels dbo:population, which occurs in predicate position
    output = link_entities(make_question("population"), desk_graph)
    assert output.empty


def test_link_relations_win_to_award(desk_graph, desk_lexicon):
    q = make_question(TESLA_Q)
    entities = link_entities(q, desk_graph)
    output = link_relations(q, desk_graph, entities, desk_lexicon)
    assert output.task == RL
    assert [link.predicate for link in output.payload] == [Iri(DBO + "award")]
    assert output.payload[0].text == "win"


def test_link_relations_capital_label(desk_graph, desk_lexicon):
    q = make_question("What is the capital of Finland?")
    entities = link_entities(q, desk_graph)
    output = link_relations(q, desk_graph, entities, desk_lexicon)
    assert [link.predicate for link in output.payload] == [Iri(DBO + "capital")]


def test_link_relations_unknown_verbs(desk_graph, desk_lexicon):
    q = make_question("Who helmed Inception?")
    entities = link_entities(q, desk_graph)
    output = link_relations(q, desk_graph, entities, desk_lexicon)
    assert output.empty


def test_relation_lexicon_camel_case_split(desk_graph, desk_lexicon):
    assert desk_lexicon.lookup("largest city") == {Iri(DBO + "largestCity")}
    assert desk_lexicon.lookup("largestcity") == {Iri(DBO + "largestCity")}


def test_parse_synonyms_format():
    synonyms = parse_synonyms("# comment\nwin\t<http://dbpedia.org/ontology/award>\n")
    assert synonyms == {"win": Iri(DBO + "award")}
    with pytest.raises(ValueError):
        parse_synonyms("no-tab-here\n")


def test_build_query_tesla(desk_graph, desk_lexicon):
    q = make_question(TESLA_Q)
    entities = link_entities(q, desk_graph)
    relations = link_relations(q, desk_graph, entities, desk_lexicon)
    output = build_query(q, entities, relations, desk_graph)
    assert output.task == QB
    query = output.payload
    assert query.form == ASK
    assert query.patterns == (
        TriplePattern(Iri(DBR + "Nikola_Tesla"), Iri(DBO + "award"), Iri(DBR + "Nobel_Prize_in_Physics")),
    )
    assert evaluate(desk_graph, query).boolean is True


def test_build_query_finland(desk_graph, desk_lexicon):
    q = make_question("What is the capital of Finland?")
    entities = link_entities(q, desk_graph)
    relations = link_relations(q, desk_graph, entities, desk_lexicon)
    output = build_query(q, entities, relations, desk_graph)
    query = output.payload
    assert query.form == SELECT
    assert query.projection == ("x",)
    assert query.patterns == (
        TriplePattern(Iri(DBR + "Finland"), Iri(DBO + "capital"), Variable("x")),
    )


def test_build_query_prefers_satisfied_direction(desk_graph, desk_lexicon):
    q = make_question("How many people speak German?")
    entities = link_entities(q, desk_graph)
    relations = link_relations(q, desk_graph, entities, desk_lexicon)
    query = build_query(q, entities, relations, desk_graph).payload
    # German is the object of dbo:language triples, so ranking flips the
    # variable into subject position.
    assert query.patterns[0].subject == Variable("x")
    assert query.patterns[0].object == Iri(DBR + "German_language")


def test_build_query_empty_inputs(desk_graph):
    q = make_question("Who helmed Inception?")
    empty_rl = ComponentOutput(task=RL, payload=())
    entities = link_entities(q, desk_graph)
    output = build_query(q, entities, empty_rl, desk_graph)
    assert output.empty
    assert output.payload is None


def test_ask_iff_boolean_answer_type(desk_graph, desk_lexicon, desk_dataset):
    for record in desk_dataset.records:
        q = record.question
        entities = link_entities(q, desk_graph)
        relations = link_relations(q, desk_graph, entities, desk_lexicon)
        output = build_query(q, entities, relations, desk_graph)
        if output.payload is None:
            continue
        assert (output.payload.form == ASK) == (answer_type(q) == "boolean")


def test_component_output_arity():
    assert ComponentOutput(task=NED, payload=()).arity == 0
    assert ComponentOutput(task=QB, payload=None).arity == 0
