"""Outcome classes and the per-question micro F-score used to derive them."""

from __future__ import annotations

SUCCESS = "Success"
NO_ANSWER = "NoAnswer"
WRONG_ANSWER = "WrongAnswer"

# Fixed order; ties in classifier argmax resolve toward the earlier class.
OUTCOME_CLASSES = (SUCCESS, NO_ANSWER, WRONG_ANSWER)

CLASS_INDEX = {name: i for i, name in enumerate(OUTCOME_CLASSES)}


def micro_f1(predicted: set, gold: set) -> tuple[float, float, float]:
    """Set precision/recall/F between one prediction and its gold set."""
    if not gold:
        raise ValueError("gold set must be non-empty")
    hits = len(set(predicted) & set(gold))
    precision = hits / len(predicted) if predicted else 0.0
    recall = hits / len(gold)
    f = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    return precision, recall, f


def label_example(output_empty: bool, f: float) -> str:
    """Three-way outcome label: emptiness first, then exact-match F."""
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"F-score out of range: {f}")
    if output_empty:
        return NO_ANSWER
    if f == 1.0:
        return SUCCESS
    return WRONG_ANSWER
