import json

import numpy as np
import pytest

from kgqa_explain.classifiers import (
    CLASSIFIER_KINDS,
    DECISION_TREE,
    GAUSSIAN_NB,
    LINEAR_SVM,
    LOGISTIC_REGRESSION,
    RANDOM_FOREST,
    ClassifierModel,
    SchemaMismatchError,
    TrainingError,
    TrainingExample,
    cross_validate,
    examples_to_arrays,
    fit_decision_tree,
    fit_gaussian_nb,
    fit_logistic_regression,
    fit_random_forest,
    lr_loss_and_grad,
    make_folds,
    model_from_dict,
    model_to_dict,
    predict,
    save_model,
    load_model,
    train,
)
from kgqa_explain.outcomes import NO_ANSWER, OUTCOME_CLASSES, SUCCESS
from kgqa_explain.questions import FeatureVector

from .oracles import make_separable_blobs, numeric_lr_gradient


def as_examples(X, y, schema=None):
    schema = schema or tuple(f"f{i}" for i in range(X.shape[1]))
    return [
        TrainingExample(
            question_id=str(i),
            features=FeatureVector(schema=schema, values=tuple(int(v) for v in row)),
            label=OUTCOME_CLASSES[int(c)],
            f_score=1.0 if c == 0 else 0.0,
        )
        for i, (row, c) in enumerate(zip(X, y))
    ]


# --- logistic regression ---------------------------------------------------


def test_lr_gradient_matches_finite_differences():
    rng = np.random.default_rng(42)
    for _ in range(20):
        n, r = int(rng.integers(5, 50)), int(rng.integers(2, 10))
        X = rng.integers(0, 2, size=(n, r)).astype(float)
        y = rng.integers(0, 3, size=n)
        W = rng.normal(size=(3, r))
        b = rng.normal(size=3)
        reg = float(rng.choice([0.01, 0.1, 1.0]))
        _, grad_W, grad_b = lr_loss_and_grad(W, b, X, y, reg)
        num_W, num_b = numeric_lr_gradient(lambda w, bb: lr_loss_and_grad(w, bb, X, y, reg)[0], W, b)
        denom = max(np.abs(grad_W).max(), np.abs(grad_b).max(), 1e-8)
        assert np.abs(grad_W - num_W).max() / denom < 1e-5
        assert np.abs(grad_b - num_b).max() / denom < 1e-5


def test_lr_loss_never_increases():
    rng = np.random.default_rng(3)
    X = rng.integers(0, 2, size=(60, 8)).astype(float)
    y = rng.integers(0, 3, size=60)
    history: list = []
    fit_logistic_regression(X, y, reg=0.1, max_iter=300, history=history)
    assert len(history) > 2
    assert all(b <= a + 1e-12 for a, b in zip(history, history[1:]))


def test_lr_zero_weights_predict_uniform():
    schema = ("a", "b")
    model = ClassifierModel(
        kind=LOGISTIC_REGRESSION,
        task="NED",
        schema=schema,
        hyper={"reg": 1.0},
        seed=0,
        params={"weights": np.zeros((3, 2)), "bias": np.zeros(3)},
    )
    cls, probs = predict(model, FeatureVector(schema=schema, values=(1, 0)))
    assert probs == pytest.approx([1 / 3, 1 / 3, 1 / 3])
    assert cls == SUCCESS  # tie resolves in class-enum order


def test_lr_separable_blobs_high_accuracy():
    X, y = make_separable_blobs(n=300, seed=1)
    examples = as_examples(X, y)
    model = train(LOGISTIC_REGRESSION, examples, grid=[{"reg": 0.01}], seed=0)
    correct = sum(predict(model, e.features)[0] == e.label for e in examples)
    assert correct / len(examples) >= 0.99


# --- decision tree and random forest ----------------------------------------


def xor_examples(repeats=10):
    rows = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
    X = np.array([(a, b) for a, b, _ in rows] * repeats, dtype=float)
    y = np.array([c for _, _, c in rows] * repeats, dtype=np.intp)
    return X, y


def test_xor_tree_beats_linear_model():
    X, y = xor_examples()
    examples = as_examples(X, y)
    tree = train(DECISION_TREE, examples, grid=[{"max_depth": 3}], seed=0)
    tree_acc = np.mean([predict(tree, e.features)[0] == e.label for e in examples])
    assert tree_acc == 1.0
    lr = train(LOGISTIC_REGRESSION, examples, grid=[{"reg": 0.01}], seed=0)
    lr_acc = np.mean([predict(lr, e.features)[0] == e.label for e in examples])
    assert lr_acc <= 0.75


def test_tree_depth_limit_respected():
    X, y = xor_examples()
    params = fit_decision_tree(X, y, max_depth=1)
    tree = params["tree"]
    # a depth-1 tree has at most 3 nodes
    assert len(tree["feature"]) <= 3


def test_forest_with_one_tree_equals_tree():
    rng = np.random.default_rng(9)
    X = rng.integers(0, 2, size=(80, 10)).astype(float)
    y = rng.integers(0, 3, size=80)
    forest = fit_random_forest(X, y, n_trees=1, max_depth=5, max_features=None, bootstrap=False, seed=7)
    tree = fit_decision_tree(X, y, max_depth=5)
    probes = rng.integers(0, 2, size=(500, 10)).astype(float)
    for x in probes:
        f_probs = _forest_probs(forest, x)
        t_probs = _tree_probs(tree, x)
        assert int(np.argmax(f_probs)) == int(np.argmax(t_probs))


def _forest_probs(params, x):
    from kgqa_explain.classifiers import _predict_probs

    return _predict_probs(RANDOM_FOREST, params, x)


def _tree_probs(params, x):
    from kgqa_explain.classifiers import _predict_probs

    return _predict_probs(DECISION_TREE, params, x)


def test_forest_is_seed_deterministic():
    X, y = make_separable_blobs(n=90, seed=5)
    a = fit_random_forest(X, y, n_trees=10, max_depth=5, seed=3)
    b = fit_random_forest(X, y, n_trees=10, max_depth=5, seed=3)
    assert a == b
    c = fit_random_forest(X, y, n_trees=10, max_depth=5, seed=4)
    assert a != c


# --- Gaussian naive Bayes ----------------------------------------------------


def test_gaussian_nb_matches_hand_computation():
    X = np.array([[1.0, 0.0], [1.0, 1.0], [0.0, 0.0], [0.0, 1.0]])
    y = np.array([0, 0, 1, 1], dtype=np.intp)
    params = fit_gaussian_nb(X, y)
    assert params["priors"][0] == pytest.approx(0.5)
    assert params["means"][0].tolist() == [1.0, 0.5]
    assert params["variances"][0] == pytest.approx([1e-9, 0.25 + 1e-9])

    # hand-computed posterior for x = (1, 0)
    x = np.array([1.0, 0.0])
    log_likes = []
    for c in range(2):
        ll = np.log(0.5)
        for j in range(2):
            var = params["variances"][c][j]
            mean = params["means"][c][j]
            ll += -0.5 * np.log(2 * np.pi * var) - (x[j] - mean) ** 2 / (2 * var)
        log_likes.append(ll)
    expected = np.exp(log_likes[0]) / (np.exp(log_likes[0] - max(log_likes)) + np.exp(log_likes[1] - max(log_likes)))

    from kgqa_explain.classifiers import _predict_probs

    probs = _predict_probs(GAUSSIAN_NB, params, x)
    assert int(np.argmax(probs)) == 0
    assert probs[2] == 0.0  # class without examples keeps zero probability


def test_single_class_training_predicts_that_class():
    X = np.ones((5, 3))
    y = np.full(5, 1, dtype=np.intp)  # all NoAnswer
    examples = as_examples(X, y)
    for kind in CLASSIFIER_KINDS:
        model = train(kind, examples, grid=[{}] if kind == GAUSSIAN_NB else None, seed=0)
        cls, probs = predict(model, examples[0].features)
        assert cls == NO_ANSWER
        if kind in (GAUSSIAN_NB, DECISION_TREE, RANDOM_FOREST, LINEAR_SVM):
            assert probs[1] == pytest.approx(1.0)


def test_svm_separates_blobs():
    X, y = make_separable_blobs(n=120, seed=2)
    examples = as_examples(X, y)
    model = train(LINEAR_SVM, examples, grid=[{"reg": 0.01}], seed=0)
    acc = np.mean([predict(model, e.features)[0] == e.label for e in examples])
    assert acc >= 0.95


# --- prediction contract ------------------------------------------------------


def test_probabilities_sum_to_one_for_every_kind(desk_training):
    examples = desk_training["NED"][:40]
    for kind in CLASSIFIER_KINDS:
        grid = None if kind != LOGISTIC_REGRESSION else [{"reg": 0.1}]
        model = train(kind, examples, grid=grid, seed=0)
        for e in examples[:10]:
            _, probs = predict(model, e.features)
            assert all(p >= 0 for p in probs)
            assert sum(probs) == pytest.approx(1.0, abs=1e-9)


def test_schema_mismatch_rejected():
    X = np.ones((4, 2))
    y = np.array([0, 0, 1, 1], dtype=np.intp)
    model = train(DECISION_TREE, examples := as_examples(X, y), grid=[{"max_depth": 2}], seed=0)
    other = FeatureVector(schema=("x", "y", "z"), values=(1, 1, 0))
    with pytest.raises(SchemaMismatchError):
        predict(model, other)
    mixed = examples[:2] + as_examples(X, y, schema=("p", "q"))[2:]
    with pytest.raises(SchemaMismatchError):
        examples_to_arrays(mixed)


def test_empty_training_set_rejected():
    with pytest.raises(TrainingError):
        train(DECISION_TREE, [], seed=0)


# --- cross-validation ---------------------------------------------------------


def test_folds_partition_and_sizes():
    labels = np.array([0] * 50 + [1] * 30 + [2] * 20, dtype=np.intp)
    folds = make_folds(labels, k=10, seed=0)
    sizes = [len(f) for f in folds]
    assert sum(sizes) == 100
    assert max(sizes) - min(sizes) <= 1
    assert sorted(np.concatenate(folds).tolist()) == list(range(100))


def test_fold_sizes_with_remainder():
    labels = np.zeros(103, dtype=np.intp)
    sizes = sorted(len(f) for f in make_folds(labels, k=10, seed=1))
    assert sizes == [10] * 7 + [11] * 3


def test_folds_are_stratified():
    labels = np.array([0] * 60 + [1] * 30 + [2] * 10, dtype=np.intp)
    folds = make_folds(labels, k=10, seed=3)
    for fold in folds:
        counts = np.bincount(labels[fold], minlength=3)
        assert counts[0] == 6 and counts[1] == 3 and counts[2] == 1


def test_too_few_examples_rejected():
    with pytest.raises(TrainingError):
        make_folds(np.zeros(5, dtype=np.intp), k=10, seed=0)


def test_cv_separable_blobs_lr():
    X, y = make_separable_blobs(n=300, seed=0)
    report = cross_validate(LOGISTIC_REGRESSION, as_examples(X, y), k=10, grid=[{"reg": 0.01}], seed=0)
    assert report.mean_accuracy >= 0.95
    assert len(report.fold_accuracies) == 10
    assert report.mean_accuracy == pytest.approx(np.mean(report.fold_accuracies))
    confusion = np.array(report.confusion)
    support = confusion.sum(axis=1)
    assert support.sum() == 300


def test_cv_report_confusion_row_sums_are_support(desk_training):
    report = cross_validate(DECISION_TREE, desk_training["QB"], k=5, grid=[{"max_depth": 5}], seed=0)
    confusion = np.array(report.confusion)
    labels = [e.label for e in desk_training["QB"]]
    for i, name in enumerate(OUTCOME_CLASSES):
        assert confusion[i].sum() == labels.count(name)


def test_grid_tie_breaks_toward_earlier_entry():
    X = np.ones((20, 2))
    y = np.zeros(20, dtype=np.intp)
    # constant data: every hyper ties, the first grid entry must win
    report = cross_validate(
        DECISION_TREE, as_examples(X, y), k=5, grid=[{"max_depth": 3}, {"max_depth": 8}], seed=0
    )
    assert report.chosen_hyper == {"max_depth": 3}


def test_cv_is_seed_deterministic(desk_training):
    a = cross_validate(GAUSSIAN_NB, desk_training["RL"], k=5, seed=42)
    b = cross_validate(GAUSSIAN_NB, desk_training["RL"], k=5, seed=42)
    assert a == b


# --- persistence ---------------------------------------------------------------


@pytest.mark.parametrize("kind", CLASSIFIER_KINDS)
def test_model_roundtrip_exact(kind, desk_training, tmp_path):
    grid = [{"reg": 0.1}] if kind in (LOGISTIC_REGRESSION, LINEAR_SVM) else None
    model = train(kind, desk_training["NED"][:60], grid=grid, task="NED", seed=0)
    path = tmp_path / "model.json"
    save_model(model, path)
    reloaded = load_model(path)
    assert model_to_dict(reloaded) == model_to_dict(model)
    for e in desk_training["NED"][:20]:
        assert predict(reloaded, e.features) == predict(model, e.features)
    # a second save is byte-identical
    again = tmp_path / "model2.json"
    save_model(reloaded, again)
    assert path.read_bytes() == again.read_bytes()


def test_model_format_version_checked():
    with pytest.raises(ValueError):
        model_from_dict({"format": "something-else"})


def test_oversample_balances_classes(desk_training):
    from kgqa_explain.classifiers import oversample

    balanced = oversample(desk_training["QB"], seed=0)
    counts = {label: 0 for label in OUTCOME_CLASSES}
    for e in balanced:
        counts[e.label] += 1
    assert len(set(counts.values())) == 1
    assert oversample(desk_training["QB"], seed=0) == balanced  # seeded
    model = train(GAUSSIAN_NB, desk_training["QB"], balance="oversample", seed=0)
    assert model.kind == GAUSSIAN_NB
    with pytest.raises(TrainingError):
        train(GAUSSIAN_NB, desk_training["QB"], balance="smote", seed=0)


def test_seeded_training_is_bit_identical(desk_training):
    a = train(RANDOM_FOREST, desk_training["NED"], grid=[{"n_trees": 5, "max_depth": 5}], seed=11)
    b = train(RANDOM_FOREST, desk_training["NED"], grid=[{"n_trees": 5, "max_depth": 5}], seed=11)
    assert json.dumps(model_to_dict(a), sort_keys=True) == json.dumps(model_to_dict(b), sort_keys=True)
