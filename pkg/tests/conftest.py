import json
from pathlib import Path

import pytest

from kgqa_explain.benchmark import build_training_set, load_dataset
from kgqa_explain.classifiers import LOGISTIC_REGRESSION, train
from kgqa_explain.components import TASKS, RelationLexicon, load_synonyms
from kgqa_explain.graph import load_graph
from kgqa_explain.pipeline import PipelineConfig
from kgqa_explain.templates import load_templates

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

TESLA_QUESTION = "Did Tesla win a nobel prize in physics?"
CANADA_QUESTION = "What is the population of Canada?"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def desk_graph():
    return load_graph(DATA_DIR / "desk_kg.nt")


@pytest.fixture(scope="session")
def desk_lexicon(desk_graph):
    return RelationLexicon.from_graph(
        desk_graph, load_synonyms(DATA_DIR / "relation_synonyms.tsv")
    )


@pytest.fixture(scope="session")
def desk_dataset(desk_graph):
    return load_dataset(DATA_DIR / "desk_questions.json", desk_graph)


@pytest.fixture(scope="session")
def template_repo():
    return load_templates()


@pytest.fixture(scope="session")
def desk_training(desk_dataset, desk_graph, desk_lexicon):
    return {
        task: build_training_set(desk_dataset.records, desk_graph, task, desk_lexicon)
        for task in TASKS
    }


@pytest.fixture(scope="session")
def desk_models(desk_training):
    return {
        task: train(LOGISTIC_REGRESSION, desk_training[task], grid=[{"reg": 0.1}], task=task, seed=0)
        for task in TASKS
    }


@pytest.fixture(scope="session")
def desk_pipeline(desk_graph, desk_models, template_repo, desk_lexicon):
    return PipelineConfig(
        graph=desk_graph, models=desk_models, repo=template_repo, lexicon=desk_lexicon
    )


@pytest.fixture(scope="session")
def survey_questions():
    return json.loads((DATA_DIR / "survey_questions.json").read_text(encoding="utf-8"))
