import math
import warnings

import pytest
from hypothesis import given, strategies as st

from prosel.similarity import (
    SentenceRepr,
    SimilarityError,
    SimilarityMode,
    ZeroNormWarning,
    combined_similarity,
    cosine,
    similarity,
    syntactic_similarity,
)


def test_cosine_identity():
    assert cosine([1, 2, 3], [1, 2, 3]) == 1.0


def test_cosine_orthogonal():
    assert cosine([1, 0], [0, 1]) == 0.0


def test_cosine_45_degrees():
    assert cosine([1, 1], [1, 0]) == pytest.approx(1 / math.sqrt(2), abs=1e-9)


def test_cosine_length_mismatch():
    with pytest.raises(SimilarityError, match="length mismatch"):
        cosine([1, 2], [1, 2, 3])


def test_cosine_zero_norm_flagged():
    with pytest.warns(ZeroNormWarning):
        assert cosine([0, 0], [1, 2]) == 0.0


def test_syntactic_identical():
    assert syntactic_similarity([0, 2, 1], [0, 2, 1]) == 1.0


def test_syntactic_zero_padding():
    expected = 5 / (math.sqrt(14) * math.sqrt(5))
    got = syntactic_similarity([0, 2, 1, 3], [0, 2, 1])
    assert got == pytest.approx(expected, abs=1e-12)
    assert got == syntactic_similarity([0, 2, 1], [0, 2, 1, 3])


def test_syntactic_single_token_pair_degenerate():
    with pytest.warns(ZeroNormWarning):
        assert syntactic_similarity([0], [0]) == 0.0


def test_combined_is_channel_mean():
    a = SentenceRepr(cwe=[1.0, 0.0], syndist=(0, 2, 1))
    b = SentenceRepr(cwe=[1.0, 1.0], syndist=(0, 1))
    expected = 0.5 * (
        cosine(a.cwe, b.cwe) + syntactic_similarity(a.syndist, b.syndist)
    )
    assert combined_similarity(a, b) == pytest.approx(expected, abs=0)
    assert combined_similarity(a, b) == combined_similarity(b, a)


def test_combined_identical_records():
    a = SentenceRepr(cwe=[0.3, -0.2, 0.9], syndist=(0, 3, 1, 2))
    assert combined_similarity(a, a) == 1.0


def test_combined_missing_channel_named():
    full = SentenceRepr(cwe=[1.0, 0.0], syndist=(0, 1))
    no_cwe = SentenceRepr(syndist=(0, 1))
    no_syn = SentenceRepr(cwe=[1.0, 0.0])
    with pytest.raises(SimilarityError, match="cwe"):
        combined_similarity(no_cwe, full)
    with pytest.raises(SimilarityError, match="syndist"):
        combined_similarity(full, no_syn)


def test_mode_dispatch_requirements():
    no_cwe = SentenceRepr(syndist=(0, 1))
    no_syn = SentenceRepr(cwe=[1.0, 0.0])
    assert similarity(no_cwe, no_cwe, SimilarityMode.SYNTACTIC) == 1.0
    assert similarity(no_syn, no_syn, SimilarityMode.CWE) == 1.0
    with pytest.raises(SimilarityError, match="syndist"):
        similarity(no_syn, no_syn, SimilarityMode.SYNTACTIC)
    with pytest.raises(SimilarityError, match="cwe"):
        similarity(no_cwe, no_cwe, SimilarityMode.CWE)


def test_empty_repr_rejected():
    with pytest.raises(SimilarityError):
        SentenceRepr()


# coarse grid keeps norms well away from underflow
_vec = st.lists(
    st.floats(min_value=-10, max_value=10, allow_nan=False).map(
        lambda v: round(v, 4)
    ),
    min_size=1,
    max_size=8,
)


@given(_vec, _vec)
def test_cosine_symmetric_and_bounded(a, b):
    size = max(len(a), len(b))
    a = a + [0.0] * (size - len(a))
    b = b + [0.0] * (size - len(b))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ZeroNormWarning)
        left = cosine(a, b)
        right = cosine(b, a)
    assert left == right
    assert -1.0 <= left <= 1.0


@given(_vec)
def test_self_similarity_exactly_one(vec):
    if not any(vec):
        return
    assert cosine(vec, vec) == 1.0


@given(_vec, st.floats(min_value=0.001, max_value=1000))
def test_cosine_scale_invariant(vec, scale):
    if not any(vec):
        return
    other = [1.0] * len(vec)
    scaled = [v * scale for v in vec]
    assert cosine(scaled, other) == pytest.approx(
        cosine(vec, other), abs=1e-9
    )
