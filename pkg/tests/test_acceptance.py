"""Acceptance suite: one test per criterion, one PASS line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.
Everything here uses seeded synthetic fixtures only.
"""

import random
import time

import numpy as np

from prosel.corpus import index_bytes, ingest, load_index, save_index
from prosel.errors import IndexFormatError
from prosel.projection import fit
from prosel.selection import (
    SelectionConfig,
    select_paragraph,
    select_sentence,
)
from prosel.similarity import SimilarityMode
from prosel.sweep import max_drop_segment, sweep
from prosel.syndist import distance_vector
from prosel.trees import parse_tree

from conftest import (
    GOLDEN_TREE,
    GOLDEN_VECTOR,
    corpus_rows,
    make_corpus,
    random_tree,
    write_jsonl,
)
from oracles import oracle_distance_vector, oracle_paragraph_step, oracle_select_sentence
from test_selection import random_queries

MODES = [SimilarityMode.SYNTACTIC, SimilarityMode.CWE, SimilarityMode.COMBINED]
WEIGHT_GRID = [1.00, 0.95, 0.90, 0.85, 0.80, 0.75, 0.70]

# every (lsw, result) emitted by the selection-oracle suite, re-checked
# against the loss identity in its own criterion below
_EMITTED: list[tuple[float, object]] = []


def _report(name: str, detail: str, elapsed: float | None = None):
    timing = f" ({elapsed * 1000:.2f} ms)" if elapsed is not None else ""
    print(f"ACCEPTANCE PASS [{name}]: {detail}{timing}")


def test_golden_distance_vector():
    tree = parse_tree(GOLDEN_TREE)
    timings = []
    for _ in range(5):
        start = time.perf_counter()
        distance_vector(tree)
        timings.append(time.perf_counter() - start)
    best = min(timings)
    vector = distance_vector(tree)
    assert vector == GOLDEN_VECTOR
    assert vector.index(max(vector)) == 5  # the quick|and clause boundary
    assert vector[3] == 3  # the fox|is subject reset
    assert best < 0.001
    _report(
        "golden-distance-vector",
        f"vector {vector} exact, argmax at gap 5, value 3 at gap 3",
        best,
    )


def test_syntactic_distance_oracle_500_trees():
    rng = random.Random(1001)
    start = time.perf_counter()
    checked = 0
    for _ in range(500):
        tree = random_tree(rng, rng.randint(1, 10))
        assert distance_vector(tree) == oracle_distance_vector(tree)
        checked += 1
    elapsed = time.perf_counter() - start
    assert checked == 500
    assert elapsed < 5.0
    _report(
        "syndist-oracle",
        f"{checked}/500 random trees agree with brute-force LCA heights",
        elapsed,
    )


def test_selection_oracle_100_corpora():
    rng = random.Random(2002)
    start = time.perf_counter()
    steps_checked = 0
    for trial in range(100):
        corpus = make_corpus(corpus_rows(rng, rng.randint(3, 20)))
        projector = fit(corpus)
        queries = random_queries(rng, rng.randint(1, 6))
        lsw = WEIGHT_GRID[trial % len(WEIGHT_GRID)]
        for mode in MODES:
            single = select_sentence(corpus, queries[0], mode)
            oracle_id, oracle_ls = oracle_select_sentence(
                corpus, queries[0], mode
            )
            assert single.chosen_id == oracle_id
            assert single.ls == oracle_ls
            assert single.d == 0.0
            assert single.loss == 1.0 - single.ls
            _EMITTED.append((1.0, single))

            cfg = SelectionConfig(mode=mode, lsw=lsw)
            results = select_paragraph(corpus, queries, cfg, projector)
            previous = None
            for query, result in zip(queries, results):
                loss, chosen_id, ls, d, record = oracle_paragraph_step(
                    corpus, query, cfg, projector, previous
                )
                assert result.chosen_id == chosen_id
                assert result.ls == ls
                assert result.d == d
                assert result.loss == loss
                _EMITTED.append((lsw, result))
                steps_checked += 1
                previous = record
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _report(
        "selection-oracle",
        f"100 corpora, {steps_checked} paragraph steps and 300 sentence "
        f"selections match exhaustive oracles in all three modes",
        elapsed,
    )


def test_eq1_loss_identity_across_oracle_suite():
    assert _EMITTED, "selection-oracle suite must run first"
    worst = 0.0
    for lsw, result in _EMITTED:
        recomputed = lsw * (1.0 - result.ls) + (1.0 - lsw) * result.d
        worst = max(worst, abs(result.loss - recomputed))
        assert abs(result.loss - recomputed) <= 1e-12
    _report(
        "eq1-loss-identity",
        f"{len(_EMITTED)} emitted losses match lsw*(1-ls)+(1-lsw)*d; "
        f"worst deviation {worst:.2e} <= 1e-12",
    )


def test_scalarization_monotonicity_across_grid():
    rng = random.Random(3003)
    violations = 0
    trials = 0
    for _ in range(30):
        corpus = make_corpus(corpus_rows(rng, rng.randint(5, 20)))
        projector = fit(corpus)
        anchor = corpus.records[rng.randrange(len(corpus.records))]
        expected_first = select_sentence(
            corpus, anchor.repr, SimilarityMode.SYNTACTIC
        ).chosen_id
        query = random_queries(rng, 1)[0]
        picked = []
        for lsw in WEIGHT_GRID:
            cfg = SelectionConfig(mode=SimilarityMode.SYNTACTIC, lsw=lsw)
            first, second = select_paragraph(
                corpus, [anchor.repr, query], cfg, projector
            )
            assert first.chosen_id == expected_first
            picked.append(second)
        for earlier, later in zip(picked, picked[1:]):
            trials += 1
            if later.d > earlier.d or later.ls > earlier.ls:
                violations += 1
    assert violations == 0
    _report(
        "scalarization-monotonicity",
        f"selected D and LS non-increasing as lsw decreases across the "
        f"weight grid; 0/{trials} violations",
    )


def test_sweep_trade_off_200_paragraphs():
    rng = random.Random(4004)
    corpus = make_corpus(corpus_rows(rng, 60))
    projector = fit(corpus)
    paragraphs = [
        random_queries(rng, rng.randint(2, 5)) for _ in range(200)
    ]
    cfg = SelectionConfig(mode=SimilarityMode.SYNTACTIC)
    start = time.perf_counter()
    points = sweep(corpus, paragraphs, cfg, WEIGHT_GRID, projector)
    elapsed = time.perf_counter() - start
    assert [p.lsw for p in points] == WEIGHT_GRID
    violations = 0
    for earlier, later in zip(points, points[1:]):
        if later.mean_acoustic_distance > earlier.mean_acoustic_distance:
            violations += 1
        if later.mean_linguistic_distance < earlier.mean_linguistic_distance:
            violations += 1
    assert violations == 0
    segment = max_drop_segment(points)
    assert segment is not None
    assert elapsed < 60.0
    _report(
        "sweep-trade-off",
        f"200-paragraph workload: acoustic distance non-increasing and "
        f"linguistic distance non-decreasing across the grid "
        f"(0 violations); max drop {segment[2]:.4f} on lsw "
        f"{segment[0]}->{segment[1]}",
        elapsed,
    )


def test_pca_checks():
    np_rng = np.random.default_rng(5005)
    basis = np.linalg.qr(np_rng.normal(size=(64, 2)))[0].T
    coords = np_rng.normal(size=(50, 2)) * 2.5
    points = np_rng.normal(size=64) + coords @ basis
    projector = fit(points)

    projected = projector.project_batch(points)
    true_d = np.linalg.norm(coords[:, None, :] - coords[None, :, :], axis=-1)
    proj_d = np.linalg.norm(
        projected[:, None, :] - projected[None, :, :], axis=-1
    )
    max_err = float(np.max(np.abs(true_d - proj_d)))
    assert max_err < 1e-6

    gram = projector.components @ projector.components.T
    ortho_err = float(np.max(np.abs(gram - np.eye(2))))
    assert ortho_err < 1e-9

    origin = projector.project(projector.mean)
    assert float(np.max(np.abs(origin))) < 1e-9

    _report(
        "pca-checks",
        f"planar 64-D distances preserved to {max_err:.2e}, components "
        f"orthonormal to {ortho_err:.2e}, project(mean) = (0, 0)",
    )


def test_persistence_round_trip_and_corruption(tmp_path):
    rng = random.Random(6006)
    corpus_path = tmp_path / "corpus.jsonl"
    write_jsonl(corpus_path, corpus_rows(rng, 50))
    corpus = ingest(corpus_path)
    corpus.projector = fit(corpus)
    index_path = tmp_path / "corpus.psel"
    save_index(corpus, index_path)
    first = index_path.read_bytes()

    loaded = load_index(index_path)
    assert index_bytes(loaded) == first

    corrupted = bytearray(first)
    corrupted[len(corrupted) // 3] ^= 0x5A
    bad_path = tmp_path / "bad.psel"
    bad_path.write_bytes(bytes(corrupted))
    try:
        load_index(bad_path)
    except IndexFormatError as err:
        assert "checksum" in str(err)
    else:
        raise AssertionError("corrupted index was not detected")

    _report(
        "persistence",
        "ingest->save->load->save byte-identical on 50 records; "
        "bit flip detected via CRC-32",
    )
