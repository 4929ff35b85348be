# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from typing import List, Optional, Sequence, Tuple

import numpy as np

Matrix = np.ndarray
"""Dense int64 matrix whose entries are residues in [0, p)."""

# Largest prime for which int64 products of residues and their row sums stay exact.
MAX_PRIME = 32749


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """
    Exact dense linear algebra over the prime field F_p.

    Matrices are plain numpy int64 arrays reduced mod p. All methods return
    fresh arrays and never mutate their inputs.
    """

    def __init__(self, p: int):
        """
        Args:
            p (int): A prime, at most MAX_PRIME.

        Raises:
            ValueError: If p is not a prime in the supported range.
        """
        if not _is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if p > MAX_PRIME:
            raise ValueError(f"p must be at most {MAX_PRIME}, got {p}")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))

    def __repr__(self) -> str:
        return f"F_{self.p}"

    # ---- construction -------------------------------------------------

    def matrix(self, data, rows: Optional[int] = None, cols: Optional[int] = None) -> Matrix:
        a = np.array(data, dtype=np.int64)
        if a.size == 0 and rows is not None and cols is not None:
            return np.zeros((rows, cols), dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1) if rows == 1 else a.reshape(-1, 1)
        if a.ndim != 2:
            raise ValueError(f"matrix data must be two dimensional, got shape {a.shape}")
        if rows is not None and a.shape[0] != rows:
            raise ValueError(f"expected {rows} rows, got {a.shape[0]}")
        if cols is not None and a.shape[1] != cols:
            raise ValueError(f"expected {cols} columns, got {a.shape[1]}")
        return a % self.p

    def vector(self, data: Sequence[int]) -> np.ndarray:
        return np.array(data, dtype=np.int64).reshape(-1) % self.p

    def zeros(self, rows: int, cols: int) -> Matrix:
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n: int) -> Matrix:
        return np.eye(n, dtype=np.int64)

    # ---- arithmetic ---------------------------------------------------

    def inv_scalar(self, x: int) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(x, self.p - 2, self.p)

    def mul(self, a: Matrix, b: Matrix) -> Matrix:
        if a.shape[1] != b.shape[0]:
            raise ValueError(f"dimension mismatch: {a.shape} x {b.shape}")
        return (a @ b) % self.p

    def add(self, a: Matrix, b: Matrix) -> Matrix:
        if a.shape != b.shape:
            raise ValueError(f"dimension mismatch: {a.shape} + {b.shape}")
        return (a + b) % self.p

    def sub(self, a: Matrix, b: Matrix) -> Matrix:
        if a.shape != b.shape:
            raise ValueError(f"dimension mismatch: {a.shape} - {b.shape}")
        return (a - b) % self.p

    def scale(self, a: Matrix, c: int) -> Matrix:
        return (a * (int(c) % self.p)) % self.p

    def power(self, a: Matrix, k: int) -> Matrix:
        result = self.eye(a.shape[0])
        base = a % self.p
        while k > 0:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # ---- elimination --------------------------------------------------

    def rref(self, m: Matrix) -> Tuple[Matrix, List[int]]:
        """
        Reduced row echelon form with first-nonzero pivoting.

        Args:
            m (Matrix): Input matrix.

        Returns:
            Tuple[Matrix, List[int]]: The reduced matrix and the strictly
                increasing list of pivot columns.
        """
        p = self.p
        r = np.array(m, dtype=np.int64) % p
        rows, cols = r.shape
        pivots: List[int] = []
        row = 0
        for col in range(cols):
            if row >= rows:
                break
            nonzero = np.flatnonzero(r[row:, col])
            if nonzero.size == 0:
                continue
            k = row + int(nonzero[0])
            if k != row:
                r[[row, k]] = r[[k, row]]
            r[row] = (r[row] * self.inv_scalar(r[row, col])) % p
            factors = r[:, col].copy()
            factors[row] = 0
            hit = np.flatnonzero(factors)
            if hit.size:
                r[hit] = (r[hit] - np.outer(factors[hit], r[row])) % p
            pivots.append(col)
            row += 1
        return r, pivots

    def rank(self, m: Matrix) -> int:
        if m.size == 0:
            return 0
        return len(self.rref(m)[1])

    def kernel(self, m: Matrix) -> Matrix:
        """Basis of the right null space, one vector per column."""
        rows, cols = m.shape
        if rows == 0:
            return self.eye(cols)
        r, pivots = self.rref(m)
        free = [c for c in range(cols) if c not in set(pivots)]
        basis = self.zeros(cols, len(free))
        for j, f in enumerate(free):
            basis[f, j] = 1
            for i, pc in enumerate(pivots):
                basis[pc, j] = (-r[i, f]) % self.p
        return basis

    def kernel_basis(self, m: Matrix) -> List[np.ndarray]:
        k = self.kernel(m)
        return [k[:, j].copy() for j in range(k.shape[1])]

    def solve(self, a: Matrix, b: Sequence[int]) -> Optional[np.ndarray]:
        """
        Solves a·x = b.

        Returns:
            Optional[np.ndarray]: A solution, or None when the system is inconsistent.

        Raises:
            ValueError: If len(b) differs from the row count of a.
        """
        b = np.array(b, dtype=np.int64).reshape(-1)
        if a.shape[0] != b.shape[0]:
            raise ValueError(f"dimension mismatch: {a.shape} vs rhs {b.shape[0]}")
        x = self.solve_matrix(a, b.reshape(-1, 1))
        return None if x is None else x[:, 0]

    def solve_matrix(self, a: Matrix, b: Matrix) -> Optional[Matrix]:
        """Solves a·X = B for all columns at once, or None if inconsistent."""
        if a.shape[0] != b.shape[0]:
            raise ValueError(f"dimension mismatch: {a.shape} vs rhs {b.shape}")
        n = a.shape[1]
        if a.shape[0] == 0:
            return self.zeros(n, b.shape[1])
        r, pivots = self.rref(np.hstack([a, b]))
        if pivots and pivots[-1] >= n:
            return None
        x = self.zeros(n, b.shape[1])
        for i, pc in enumerate(pivots):
            x[pc] = r[i, n:]
        return x

    def inverse(self, m: Matrix) -> Matrix:
        n = m.shape[0]
        if m.shape != (n, n):
            raise ValueError(f"inverse of non-square matrix {m.shape}")
        x = self.solve_matrix(m, self.eye(n))
        if x is None or not self.is_invertible(m):
            raise ValueError("matrix is singular")
        return x

    def is_invertible(self, m: Matrix) -> bool:
        return m.shape[0] == m.shape[1] and self.rank(m) == m.shape[0]

    def is_nilpotent(self, m: Matrix) -> bool:
        n = m.shape[0]
        if n == 0:
            return True
        return not self.power(m, n).any()

    # ---- subspaces (given by spanning columns) ------------------------

    def column_basis(self, m: Matrix) -> Matrix:
        if m.size == 0:
            return self.zeros(m.shape[0], 0)
        _, pivots = self.rref(m)
        return (m[:, pivots] % self.p).copy()

    def complement(self, u: Matrix, n: int) -> Matrix:
        """Unit vectors completing the column span of u to F^n (lowest indices first)."""
        if u.size == 0:
            return self.eye(n)
        _, pivots = self.rref(u.T)
        taken = set(pivots)
        free = [j for j in range(n) if j not in taken]
        return self.eye(n)[:, free]

    def quotient_projection(self, u: Matrix, n: int) -> Tuple[Matrix, Matrix]:
        """
        Chooses coordinates on F^n / span(u).

        Returns:
            Tuple[Matrix, Matrix]: (C, Q) with C the complement columns,
                Q·u = 0 and Q·C = identity.
        """
        basis = self.column_basis(u) if u.size else self.zeros(n, 0)
        c = self.complement(basis, n)
        full = np.hstack([basis, c])
        q = self.inverse(full)[basis.shape[1] :, :] if n else self.zeros(0, 0)
        return c, q

    def contains(self, u: Matrix, v: Matrix) -> bool:
        """True when every column of v lies in the column span of u."""
        if v.size == 0:
            return True
        if u.size == 0:
            return not (v % self.p).any()
        return self.rank(np.hstack([u, v])) == self.rank(u)
