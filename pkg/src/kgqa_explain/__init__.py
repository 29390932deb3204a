"""Knowledge-graph question answering with per-stage outcome prediction
and template-based natural language explanations."""

from .components import NED, QB, RL, TASKS
from .graph import Graph, load_graph, load_ntriples, lookup_surface_form, save_graph
from .outcomes import NO_ANSWER, OUTCOME_CLASSES, SUCCESS, WRONG_ANSWER, label_example, micro_f1
from .pipeline import PipelineConfig, answer_question, explanation_flow
from .questions import extract_features, make_question
from .sparql import AnswerSet, Query, evaluate, parse_query
from .templates import load_templates

__version__ = "0.1.0"

__all__ = [
    "NED",
    "RL",
    "QB",
    "TASKS",
    "Graph",
    "load_graph",
    "load_ntriples",
    "lookup_surface_form",
    "save_graph",
    "OUTCOME_CLASSES",
    "SUCCESS",
    "NO_ANSWER",
    "WRONG_ANSWER",
    "label_example",
    "micro_f1",
    "PipelineConfig",
    "answer_question",
    "explanation_flow",
    "extract_features",
    "make_question",
    "AnswerSet",
    "Query",
    "evaluate",
    "parse_query",
    "load_templates",
    "__version__",
]
