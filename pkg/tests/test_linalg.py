# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import numpy as np
import pytest

from linalg import PrimeField


def test_rejects_non_prime_and_too_large() -> None:
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(32771)


def test_rank_and_kernel_over_f2() -> None:
    f = PrimeField(2)
    m = f.matrix([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert f.rank(m) == 2
    k = f.kernel(m)
    assert k.shape == (3, 1)
    assert not f.mul(m, k).any()


def test_inverse_over_f3() -> None:
    f = PrimeField(3)
    m = f.matrix([[1, 2], [0, 1]])
    assert np.array_equal(f.mul(m, f.inverse(m)), f.eye(2))


def test_solve_inconsistent_returns_none() -> None:
    f = PrimeField(2)
    a = f.matrix([[1, 1], [1, 1]])
    assert f.solve(a, [0, 1]) is None
    x = f.solve(a, [1, 1])
    assert x is not None and (x[0] + x[1]) % 2 == 1


def test_solve_dimension_mismatch() -> None:
    f = PrimeField(5)
    with pytest.raises(ValueError):
        f.solve(f.eye(2), [1, 2, 3])
