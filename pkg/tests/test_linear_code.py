import numpy as np
import pytest

from amdesigns.codes import (
    LinearCode,
    codewords_of_weight,
    dual,
    enumerate_codewords,
    extend_with_parity,
    is_self_orthogonal,
    minimum_distance,
    same_codewords,
    weight_distribution,
)
from amdesigns.codes import linear
from amdesigns.codes.linear import iter_codeword_chunks
from amdesigns.errors import BudgetExceeded, CodeError


def test_generator_is_reduced_and_trimmed():
    code = LinearCode.from_rows([[1, 1, 1, 1], [2, 2, 2, 2]], 3)
    assert code.k == 1
    assert code.generator.to_rows() == [[1, 1, 1, 1]]


def test_rank_zero_generator_rejected():
    with pytest.raises(CodeError):
        LinearCode.from_rows([[0, 0, 0]], 3)


def test_enumeration_visits_every_codeword_once(repetition4):
    words = list(enumerate_codewords(repetition4))
    assert [word for word, _ in words] == [(0, 0, 0, 0), (1, 1, 1, 1), (2, 2, 2, 2)]
    assert [weight for _, weight in words] == [0, 4, 4]


def test_repetition_code_distribution(repetition4):
    distribution = weight_distribution(repetition4)
    assert distribution.counts == {0: 1, 4: 2}
    assert minimum_distance(repetition4) == 4


def test_budget_is_enforced(golay11):
    with pytest.raises(BudgetExceeded) as info:
        weight_distribution(golay11, budget=100)
    assert info.value.size == 729
    assert info.value.budget == 100


def test_chunked_enumeration_matches_single_block(golay11):
    chunks = list(iter_codeword_chunks(golay11, chunk_size=100))
    assert len(chunks) == 8
    stacked = np.concatenate(chunks)
    assert stacked.shape == (729, 11)
    assert len({tuple(row) for row in stacked}) == 729


def test_worker_count_does_not_change_distribution(monkeypatch):
    monkeypatch.setattr(linear, "CHUNK_SIZE", 4)
    rows = [[1, 0, 0, 1, 2, 1], [0, 1, 0, 2, 1, 1], [0, 0, 1, 1, 1, 2]]
    single = weight_distribution(LinearCode.from_rows(rows, 3))
    pooled = weight_distribution(LinearCode.from_rows(rows, 3), workers=4)
    assert single.counts == pooled.counts
    assert single.total == 27


def test_codewords_of_weight_are_read_only(golay11):
    words = codewords_of_weight(golay11, 11)
    assert words.shape == (24, 11)
    assert np.count_nonzero(words, axis=1).tolist() == [11] * 24
    with pytest.raises(ValueError):
        words[0, 0] = 0


def test_dual_of_repetition_code(repetition4):
    dual_code = dual(repetition4)
    assert (dual_code.n, dual_code.k) == (4, 3)
    assert weight_distribution(dual_code).counts == {0: 1, 2: 12, 3: 8, 4: 6}
    assert (repetition4.generator @ dual_code.generator.transpose()).is_zero()
    assert dual_code.name == "rep4^perp"


def test_dual_of_full_space_rejected():
    with pytest.raises(CodeError):
        dual(LinearCode.from_rows([[1, 0], [0, 1]], 3))


def test_self_orthogonality(golay12, golay11, repetition4):
    assert is_self_orthogonal(golay12)
    assert not is_self_orthogonal(golay11)
    assert not is_self_orthogonal(repetition4)
    assert is_self_orthogonal(LinearCode.from_rows([[1, 1, 1]], 3))


def test_parity_extension_sums_to_zero(golay11):
    extended = extend_with_parity(golay11)
    assert extended.n == 12
    assert not (extended.generator.array.sum(axis=1) % 3).any()


def test_same_codewords_ignores_generator_choice():
    left = LinearCode.from_rows([[1, 0, 1], [0, 1, 1]], 3)
    right = LinearCode.from_rows([[1, 1, 2], [2, 0, 2]], 3)
    assert same_codewords(left, right)
    assert not same_codewords(left, LinearCode.from_rows([[1, 0, 1]], 3))


def test_to_dict_uses_exact_strings(repetition4):
    payload = repetition4.to_dict()
    assert payload == {
        "name": "rep4",
        "q": "3",
        "n": "4",
        "k": "1",
        "generator": ["1111"],
    }
