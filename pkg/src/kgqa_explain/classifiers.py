"""Three-class outcome classifiers trained from scratch on question features.

Five families are supported: multinomial logistic regression, one-vs-rest
linear SVM, decision tree, random forest, and Gaussian naive Bayes. All of
them are deterministic given a seed, and every model serializes to a
self-describing JSON record that round-trips exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .outcomes import OUTCOME_CLASSES
from .questions import FeatureVector

N_CLASSES = len(OUTCOME_CLASSES)

LOGISTIC_REGRESSION = "LogisticRegression"
LINEAR_SVM = "LinearSVM"
RANDOM_FOREST = "RandomForest"
GAUSSIAN_NB = "GaussianNB"
DECISION_TREE = "DecisionTree"

CLASSIFIER_KINDS = (LOGISTIC_REGRESSION, LINEAR_SVM, RANDOM_FOREST, GAUSSIAN_NB, DECISION_TREE)

MODEL_FORMAT_VERSION = "kgqa-model-v1"

# Grid order doubles as the tie-break: earlier entries are simpler or less
# regularized and win on equal CV accuracy.
DEFAULT_GRIDS: dict[str, list[dict]] = {
    LOGISTIC_REGRESSION: [{"reg": r} for r in (0.01, 0.1, 1.0, 10.0)],
    LINEAR_SVM: [{"reg": r} for r in (0.01, 0.1, 1.0, 10.0)],
    DECISION_TREE: [{"max_depth": d} for d in (3, 5, 8, None)],
    RANDOM_FOREST: [
        {"n_trees": n, "max_depth": d} for n in (10, 50) for d in (3, 5, 8, None)
    ],
    GAUSSIAN_NB: [{}],
}


class SchemaMismatchError(ValueError):
    """Feature schema at predict time differs from the model's schema."""


class TrainingError(ValueError):
    pass


@dataclass(frozen=True)
class TrainingExample:
    question_id: str
    features: FeatureVector
    label: str
    f_score: float


@dataclass
class ClassifierModel:
    kind: str
    task: str
    schema: tuple[str, ...]
    hyper: dict
    seed: int
    params: dict

    def predict_one(self, features: FeatureVector) -> tuple[str, list[float]]:
        return predict(self, features)


def examples_to_arrays(examples) -> tuple[np.ndarray, np.ndarray, tuple[str, ...]]:
    if not examples:
        raise TrainingError("training set is empty")
    schema = examples[0].features.schema
    for ex in examples:
        if ex.features.schema != schema:
            raise SchemaMismatchError("training examples use differing feature schemas")
    X = np.array([ex.features.values for ex in examples], dtype=np.float64)
    y = np.array([OUTCOME_CLASSES.index(ex.label) for ex in examples], dtype=np.intp)
    return X, y, schema


# --- logistic regression -------------------------------------------------


def _softmax(scores: np.ndarray) -> np.ndarray:
    shifted = scores - scores.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=1, keepdims=True)


def lr_loss_and_grad(W: np.ndarray, b: np.ndarray, X: np.ndarray, y: np.ndarray, reg: float):
    """Regularized NLL of the softmax model and its analytic gradient.

    The bias is unregularized. Returns (loss, grad_W, grad_b).
    """
    n = X.shape[0]
    P = _softmax(X @ W.T + b)
    Y = np.zeros_like(P)
    Y[np.arange(n), y] = 1.0
    loss = -np.log(np.clip(P[np.arange(n), y], 1e-300, None)).mean() + 0.5 * reg * np.sum(W * W)
    diff = (P - Y) / n
    grad_W = diff.T @ X + reg * W
    grad_b = diff.sum(axis=0)
    return loss, grad_W, grad_b


def fit_logistic_regression(
    X: np.ndarray,
    y: np.ndarray,
    reg: float,
    max_iter: int = 5000,
    tol: float = 1e-6,
    history: list | None = None,
) -> dict:
    """Full-batch gradient descent with backtracking; loss never increases.

    Pass a list as ``history`` to collect the per-iteration loss values.
    """
    r = X.shape[1]
    W = np.zeros((N_CLASSES, r))
    b = np.zeros(N_CLASSES)
    step = 1.0
    loss, grad_W, grad_b = lr_loss_and_grad(W, b, X, y, reg)
    if history is not None:
        history.append(loss)
    for _ in range(max_iter):
        grad_norm2 = float(np.sum(grad_W * grad_W) + np.sum(grad_b * grad_b))
        if np.sqrt(grad_norm2) < tol:
            break
        step = min(step * 2.0, 1e6)
        while True:
            W_new = W - step * grad_W
            b_new = b - step * grad_b
            new_loss, new_grad_W, new_grad_b = lr_loss_and_grad(W_new, b_new, X, y, reg)
            if new_loss <= loss - 1e-4 * step * grad_norm2:
                break
            step *= 0.5
            if step < 1e-16:
                W_new, b_new = W, b
                new_loss, new_grad_W, new_grad_b = loss, grad_W, grad_b
                break
        if new_loss >= loss and step < 1e-16:
            break
        W, b, loss, grad_W, grad_b = W_new, b_new, new_loss, new_grad_W, new_grad_b
        if history is not None:
            history.append(loss)
    return {"weights": W, "bias": b}


# --- linear SVM ----------------------------------------------------------


def fit_linear_svm(X: np.ndarray, y: np.ndarray, reg: float, iters: int = 2000) -> dict:
    """One-vs-rest hinge loss, full-batch subgradient descent, decaying step."""
    n, r = X.shape
    W = np.zeros((N_CLASSES, r))
    b = np.zeros(N_CLASSES)
    t0 = int(np.ceil(1.0 / reg))
    for c in range(N_CLASSES):
        sign = np.where(y == c, 1.0, -1.0)
        w = np.zeros(r)
        bc = 0.0
        for t in range(iters):
            margins = sign * (X @ w + bc)
            active = margins < 1.0
            grad_w = reg * w - (sign[active, None] * X[active]).sum(axis=0) / n
            grad_b = -sign[active].sum() / n
            eta = 1.0 / (reg * (t + t0 + 1))
            w -= eta * grad_w
            bc -= eta * grad_b
        W[c] = w
        b[c] = bc
    return {"weights": W, "bias": b}


# --- decision tree -------------------------------------------------------


def _gini(counts: np.ndarray) -> float:
    total = counts.sum()
    if total == 0:
        return 0.0
    p = counts / total
    return float(1.0 - np.sum(p * p))


def _grow_tree(X, y, depth, max_depth, rng, max_features, nodes):
    counts = np.bincount(y, minlength=N_CLASSES)
    node_id = len(nodes["feature"])
    nodes["feature"].append(-1)
    nodes["threshold"].append(0.0)
    nodes["left"].append(-1)
    nodes["right"].append(-1)
    nodes["counts"].append(counts.tolist())

    if (max_depth is not None and depth >= max_depth) or _gini(counts) == 0.0 or len(y) < 2:
        return node_id

    r = X.shape[1]
    if max_features is None or max_features >= r:
        candidates = range(r)
    else:
        candidates = sorted(rng.choice(r, size=max_features, replace=False).tolist())

    # Impure nodes split on the best candidate even at zero Gini decrease;
    # the children may still become separable further down (e.g. XOR).
    parent_gini = _gini(counts)
    best = None  # (-decrease, feature, threshold)
    for f in candidates:
        column = X[:, f]
        values = np.unique(column)
        if len(values) < 2:
            continue
        for lo, hi in zip(values[:-1], values[1:]):
            threshold = (lo + hi) / 2.0
            mask = column <= threshold
            left_counts = np.bincount(y[mask], minlength=N_CLASSES)
            right_counts = counts - left_counts
            n_left, n_right = left_counts.sum(), right_counts.sum()
            weighted = (n_left * _gini(left_counts) + n_right * _gini(right_counts)) / len(y)
            decrease = parent_gini - weighted
            key = (-decrease, f, threshold)
            if best is None or key < best:
                best = key
    if best is None:
        return node_id

    _, feature, threshold = best
    mask = X[:, feature] <= threshold
    left = _grow_tree(X[mask], y[mask], depth + 1, max_depth, rng, max_features, nodes)
    right = _grow_tree(X[~mask], y[~mask], depth + 1, max_depth, rng, max_features, nodes)
    nodes["feature"][node_id] = int(feature)
    nodes["threshold"][node_id] = float(threshold)
    nodes["left"][node_id] = left
    nodes["right"][node_id] = right
    return node_id


def fit_decision_tree(X, y, max_depth=None, rng=None, max_features=None) -> dict:
    """Gini-impurity tree with best single-feature binary splits."""
    nodes = {"feature": [], "threshold": [], "left": [], "right": [], "counts": []}
    _grow_tree(X, y, 0, max_depth, rng, max_features, nodes)
    return {"tree": nodes}


def _tree_leaf_counts(tree: dict, x: np.ndarray) -> np.ndarray:
    node = 0
    while tree["feature"][node] >= 0:
        if x[tree["feature"][node]] <= tree["threshold"][node]:
            node = tree["left"][node]
        else:
            node = tree["right"][node]
    return np.array(tree["counts"][node], dtype=np.float64)


# --- random forest -------------------------------------------------------


def fit_random_forest(
    X,
    y,
    n_trees: int,
    max_depth=None,
    max_features: str | None = "sqrt",
    bootstrap: bool = True,
    seed: int = 0,
) -> dict:
    """Bagged trees with a fresh random feature subset at every split.

    With ``n_trees=1``, ``max_features=None`` and ``bootstrap=False`` the RNG
    is never consulted, so the single tree equals a plain decision tree.
    """
    rng = np.random.default_rng(seed)
    n, r = X.shape
    per_split = int(np.ceil(np.sqrt(r))) if max_features == "sqrt" else None
    trees = []
    for _ in range(n_trees):
        if bootstrap:
            idx = rng.integers(0, n, size=n)
            Xb, yb = X[idx], y[idx]
        else:
            Xb, yb = X, y
        trees.append(fit_decision_tree(Xb, yb, max_depth, rng=rng, max_features=per_split)["tree"])
    return {"trees": trees}


# --- Gaussian naive Bayes ------------------------------------------------


def fit_gaussian_nb(X, y, var_smoothing: float = 1e-9) -> dict:
    n, r = X.shape
    means = np.zeros((N_CLASSES, r))
    variances = np.ones((N_CLASSES, r))
    priors = np.zeros(N_CLASSES)
    for c in range(N_CLASSES):
        mask = y == c
        if not mask.any():
            continue
        priors[c] = mask.sum() / n
        means[c] = X[mask].mean(axis=0)
        variances[c] = X[mask].var(axis=0) + var_smoothing
    return {"means": means, "variances": variances, "priors": priors}


# --- shared fit/predict dispatch ------------------------------------------


def _fit(kind: str, X, y, hyper: dict, seed: int) -> dict:
    if kind == LOGISTIC_REGRESSION:
        return fit_logistic_regression(X, y, reg=hyper["reg"])
    if kind == LINEAR_SVM:
        return fit_linear_svm(X, y, reg=hyper["reg"])
    if kind == DECISION_TREE:
        return fit_decision_tree(X, y, max_depth=hyper.get("max_depth"))
    if kind == RANDOM_FOREST:
        return fit_random_forest(
            X,
            y,
            n_trees=hyper.get("n_trees", 10),
            max_depth=hyper.get("max_depth"),
            max_features=hyper.get("max_features", "sqrt"),
            bootstrap=hyper.get("bootstrap", True),
            seed=seed,
        )
    if kind == GAUSSIAN_NB:
        return fit_gaussian_nb(X, y)
    raise TrainingError(f"unknown classifier kind: {kind!r}")


def _predict_probs(kind: str, params: dict, x: np.ndarray) -> np.ndarray:
    if kind == LOGISTIC_REGRESSION:
        scores = params["weights"] @ x + params["bias"]
        return _softmax(scores[None, :])[0]
    if kind == LINEAR_SVM:
        # Degenerate probabilities: all mass on the best-margin class.
        scores = params["weights"] @ x + params["bias"]
        probs = np.zeros(N_CLASSES)
        probs[int(np.argmax(scores))] = 1.0
        return probs
    if kind == DECISION_TREE:
        counts = _tree_leaf_counts(params["tree"], x)
        return counts / counts.sum()
    if kind == RANDOM_FOREST:
        votes = np.zeros(N_CLASSES)
        for tree in params["trees"]:
            counts = _tree_leaf_counts(tree, x)
            votes[int(np.argmax(counts))] += 1.0
        return votes / votes.sum()
    if kind == GAUSSIAN_NB:
        priors = params["priors"]
        log_post = np.full(N_CLASSES, -np.inf)
        for c in range(N_CLASSES):
            if priors[c] <= 0.0:
                continue
            var = params["variances"][c]
            diff = x - params["means"][c]
            log_post[c] = np.log(priors[c]) - 0.5 * np.sum(
                np.log(2.0 * np.pi * var) + diff * diff / var
            )
        shifted = log_post - log_post.max()
        probs = np.exp(shifted)
        probs[log_post == -np.inf] = 0.0
        return probs / probs.sum()
    raise TrainingError(f"unknown classifier kind: {kind!r}")


def predict(model: ClassifierModel, features: FeatureVector) -> tuple[str, list[float]]:
    """Class with probabilities; argmax ties resolve in outcome-class order."""
    if features.schema != model.schema:
        raise SchemaMismatchError(
            f"feature schema ({len(features.schema)} names) does not match model schema"
        )
    x = np.array(features.values, dtype=np.float64)
    probs = _predict_probs(model.kind, model.params, x)
    return OUTCOME_CLASSES[int(np.argmax(probs))], [float(p) for p in probs]


# --- cross-validation and grid search --------------------------------------


@dataclass
class CVReport:
    kind: str
    k: int
    seed: int
    n_examples: int
    chosen_hyper: dict
    fold_accuracies: list[float]
    mean_accuracy: float
    overall_accuracy: float
    macro_accuracy: float
    per_class_precision: dict[str, float]
    per_class_recall: dict[str, float]
    confusion: list[list[int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "seed": self.seed,
            "n_examples": self.n_examples,
            "chosen_hyper": _hyper_to_json(self.chosen_hyper),
            "fold_accuracies": self.fold_accuracies,
            "mean_accuracy": self.mean_accuracy,
            "overall_accuracy": self.overall_accuracy,
            "macro_accuracy": self.macro_accuracy,
            "per_class_precision": self.per_class_precision,
            "per_class_recall": self.per_class_recall,
            "confusion": self.confusion,
        }


def make_folds(labels: np.ndarray, k: int, seed: int) -> list[np.ndarray]:
    """Seeded, label-stratified folds whose sizes differ by at most one."""
    n = len(labels)
    if n < k:
        raise TrainingError(f"need at least k={k} examples, got {n}")
    rng = np.random.default_rng(seed)
    shuffled = rng.permutation(n)
    by_class = np.concatenate(
        [shuffled[labels[shuffled] == c] for c in range(N_CLASSES)]
    )
    folds = [by_class[i::k] for i in range(k)]
    return [np.sort(f) for f in folds]


def _fold_seed(seed: int, fold: int) -> int:
    return seed * 1000 + fold + 1


def _evaluate_folds(kind, X, y, folds, hyper, seed):
    fold_acc = []
    predictions = np.zeros(len(y), dtype=np.intp)
    for i, test_idx in enumerate(folds):
        train_mask = np.ones(len(y), dtype=bool)
        train_mask[test_idx] = False
        params = _fit(kind, X[train_mask], y[train_mask], hyper, _fold_seed(seed, i))
        preds = np.array(
            [int(np.argmax(_predict_probs(kind, params, X[j]))) for j in test_idx],
            dtype=np.intp,
        )
        predictions[test_idx] = preds
        fold_acc.append(float((preds == y[test_idx]).mean()))
    return fold_acc, predictions


def cross_validate(kind, examples, k: int = 10, grid=None, seed: int = 0) -> CVReport:
    """Grid search over seeded stratified folds; report the best entry."""
    X, y, _ = examples_to_arrays(list(examples))
    folds = make_folds(y, k, seed)
    grid = list(grid) if grid is not None else DEFAULT_GRIDS[kind]
    if not grid:
        raise TrainingError("hyperparameter grid is empty")

    best = None  # (neg mean accuracy, grid index) -> smaller is better
    best_result = None
    for gi, hyper in enumerate(grid):
        fold_acc, predictions = _evaluate_folds(kind, X, y, folds, hyper, seed)
        mean_acc = float(np.mean(fold_acc))
        key = (-mean_acc, gi)
        if best is None or key < best:
            best = key
            best_result = (hyper, fold_acc, predictions)

    hyper, fold_acc, predictions = best_result
    confusion = np.zeros((N_CLASSES, N_CLASSES), dtype=np.int64)
    for true, pred in zip(y, predictions):
        confusion[true, pred] += 1
    precision = {}
    recall = {}
    recalls_present = []
    for c, name in enumerate(OUTCOME_CLASSES):
        pred_count = confusion[:, c].sum()
        true_count = confusion[c, :].sum()
        precision[name] = float(confusion[c, c] / pred_count) if pred_count else 0.0
        recall[name] = float(confusion[c, c] / true_count) if true_count else 0.0
        if true_count:
            recalls_present.append(recall[name])
    return CVReport(
        kind=kind,
        k=k,
        seed=seed,
        n_examples=len(y),
        chosen_hyper=hyper,
        fold_accuracies=fold_acc,
        mean_accuracy=float(np.mean(fold_acc)),
        overall_accuracy=float(np.trace(confusion) / confusion.sum()),
        macro_accuracy=float(np.mean(recalls_present)) if recalls_present else 0.0,
        per_class_precision=precision,
        per_class_recall=recall,
        confusion=confusion.tolist(),
    )


def oversample(examples, seed: int = 0):
    """Duplicate minority-class examples until every class matches the
    largest one. Off by default everywhere; opt-in imbalance handling."""
    examples = list(examples)
    rng = np.random.default_rng(seed)
    by_label: dict[str, list] = {}
    for ex in examples:
        by_label.setdefault(ex.label, []).append(ex)
    target = max(len(group) for group in by_label.values())
    balanced = list(examples)
    for label in sorted(by_label):
        group = by_label[label]
        deficit = target - len(group)
        if deficit > 0:
            picks = rng.integers(0, len(group), size=deficit)
            balanced.extend(group[i] for i in picks)
    return balanced


def train(
    kind,
    examples,
    grid=None,
    task: str = "",
    k: int = 10,
    seed: int = 0,
    balance: str = "none",
) -> ClassifierModel:
    """Pick the best grid entry by mean CV accuracy, then refit on all data.

    ``balance="oversample"`` equalizes class counts before training; the
    default applies no imbalance handling.
    """
    examples = list(examples)
    if balance == "oversample":
        examples = oversample(examples, seed=seed)
    elif balance != "none":
        raise TrainingError(f"unknown balance mode {balance!r}")
    X, y, schema = examples_to_arrays(examples)
    grid = list(grid) if grid is not None else DEFAULT_GRIDS[kind]
    if not grid:
        raise TrainingError("hyperparameter grid is empty")
    if len(grid) == 1:
        hyper = grid[0]
    else:
        folds_k = min(k, len(examples))
        report = cross_validate(kind, examples, k=folds_k, grid=grid, seed=seed)
        hyper = report.chosen_hyper
    params = _fit(kind, X, y, hyper, seed)
    return ClassifierModel(kind=kind, task=task, schema=schema, hyper=hyper, seed=seed, params=params)


# --- model persistence -----------------------------------------------------


def _hyper_to_json(hyper: dict) -> dict:
    return {key: value for key, value in hyper.items()}


def _params_to_json(kind: str, params: dict):
    if kind in (LOGISTIC_REGRESSION, LINEAR_SVM):
        return {"weights": params["weights"].tolist(), "bias": params["bias"].tolist()}
    if kind == DECISION_TREE:
        return {"tree": params["tree"]}
    if kind == RANDOM_FOREST:
        return {"trees": params["trees"]}
    if kind == GAUSSIAN_NB:
        return {
            "means": params["means"].tolist(),
            "variances": params["variances"].tolist(),
            "priors": params["priors"].tolist(),
        }
    raise TrainingError(f"unknown classifier kind: {kind!r}")


def _params_from_json(kind: str, data: dict) -> dict:
    if kind in (LOGISTIC_REGRESSION, LINEAR_SVM):
        return {"weights": np.array(data["weights"]), "bias": np.array(data["bias"])}
    if kind == GAUSSIAN_NB:
        return {
            "means": np.array(data["means"]),
            "variances": np.array(data["variances"]),
            "priors": np.array(data["priors"]),
        }
    return dict(data)


def model_to_dict(model: ClassifierModel) -> dict:
    return {
        "format": MODEL_FORMAT_VERSION,
        "kind": model.kind,
        "task": model.task,
        "schema": list(model.schema),
        "hyper": _hyper_to_json(model.hyper),
        "seed": model.seed,
        "params": _params_to_json(model.kind, model.params),
    }


def model_from_dict(data: dict) -> ClassifierModel:
    if data.get("format") != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model format: {data.get('format')!r}")
    return ClassifierModel(
        kind=data["kind"],
        task=data["task"],
        schema=tuple(data["schema"]),
        hyper=dict(data["hyper"]),
        seed=data["seed"],
        params=_params_from_json(data["kind"], data["params"]),
    )


def save_model(model: ClassifierModel, path: str | Path) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model), sort_keys=True), encoding="utf-8")


def load_model(path: str | Path) -> ClassifierModel:
    return model_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
