"""Exact arithmetic and linear algebra over F_p^n.

Vectors, matrices (homomorphisms), the dual pairing, reduced row-echelon
canonical forms, kernel bases, and canonical enumeration of finite-index
subgroups represented by annihilators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence


class ResourceGuardError(RuntimeError):
    """Raised when an operation would exceed its declared scale guard."""


MAX_PRIME = 31
MAX_GROUP_ORDER = 2**24

_SMALL_PRIMES = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}


def check_prime(p: int) -> None:
    if p not in _SMALL_PRIMES:
        raise ValueError(f"p must be a prime <= {MAX_PRIME}, got {p}")


def check_order(p: int, n: int) -> None:
    if p**n > MAX_GROUP_ORDER:
        raise ResourceGuardError(f"p^n = {p}^{n} exceeds the per-run bound 2^24")


@dataclass(frozen=True)
class FpVec:
    """An element of F_p^n: a tuple of residues mod p."""

    p: int
    coords: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "coords", tuple(c % self.p for c in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    @classmethod
    def zero(cls, p: int, n: int) -> FpVec:
        return cls(p, (0,) * n)

    @classmethod
    def basis(cls, p: int, n: int, j: int) -> FpVec:
        """The standard basis vector e_j, 1-based index."""
        if not 1 <= j <= n:
            raise ValueError(f"basis index {j} out of range [1, {n}]")
        return cls(p, tuple(1 if i == j - 1 else 0 for i in range(n)))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def weight(self) -> int:
        return sum(1 for c in self.coords if c != 0)

    def _check_compat(self, other: FpVec) -> None:
        if self.p != other.p or self.n != other.n:
            raise ValueError(
                f"incompatible vectors: (p={self.p}, n={self.n}) vs "
                f"(p={other.p}, n={other.n})"
            )

    def __add__(self, other: FpVec) -> FpVec:
        self._check_compat(other)
        return FpVec(self.p, tuple((a + b) % self.p for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: FpVec) -> FpVec:
        self._check_compat(other)
        return FpVec(self.p, tuple((a - b) % self.p for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> FpVec:
        return FpVec(self.p, tuple((-a) % self.p for a in self.coords))

    def scale(self, c: int) -> FpVec:
        return FpVec(self.p, tuple((c * a) % self.p for a in self.coords))

    def __lt__(self, other: FpVec) -> bool:
        return self.coords < other.coords


# A dual vector xi induces the character x -> e(<x, xi>); same shape as FpVec.
DualVec = FpVec


@dataclass(frozen=True)
class FpMatrix:
    """A k x m matrix of residues mod p, i.e. a homomorphism F_p^m -> F_p^k."""

    p: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_prime(self.p)
        rows = tuple(tuple(c % self.p for c in row) for row in self.entries)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def identity(cls, p: int, n: int) -> FpMatrix:
        return cls(p, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, p: int, rows: int, cols: int) -> FpMatrix:
        return cls(p, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def from_rows(cls, rows: Sequence[FpVec]) -> FpMatrix:
        if not rows:
            raise ValueError("from_rows needs at least one row")
        p = rows[0].p
        for r in rows:
            rows[0]._check_compat(r)
        return cls(p, tuple(r.coords for r in rows))

    def row_vecs(self) -> tuple[FpVec, ...]:
        return tuple(FpVec(self.p, row) for row in self.entries)

    def column(self, j: int) -> FpVec:
        return FpVec(self.p, tuple(row[j] for row in self.entries))


def linear_combination(
    coeffs: Sequence[int],
    vecs: Sequence[FpVec],
    *,
    p: int | None = None,
    n: int | None = None,
) -> FpVec:
    """Sum of coeffs[i] * vecs[i] mod p.  Empty input needs declared (p, n)."""
    if len(coeffs) != len(vecs):
        raise ValueError("coeffs and vecs must have equal length")
    if not vecs:
        if p is None or n is None:
            raise ValueError("empty linear combination needs declared p and n")
        return FpVec.zero(p, n)
    head = vecs[0]
    for v in vecs:
        head._check_compat(v)
    acc = [0] * head.n
    for c, v in zip(coeffs, vecs):
        for i, x in enumerate(v.coords):
            acc[i] = (acc[i] + c * x) % head.p
    return FpVec(head.p, tuple(acc))


def pairing(x: FpVec, xi: DualVec) -> int:
    """The character exponent <x, xi> = sum x_i xi_i mod p."""
    x._check_compat(xi)
    return sum(a * b for a, b in zip(x.coords, xi.coords)) % x.p


def hom_apply(M: FpMatrix, x: FpVec) -> FpVec:
    """Matrix-vector product mod p."""
    if M.p != x.p:
        raise ValueError("modulus mismatch")
    if M.cols != x.n:
        raise ValueError(f"matrix has {M.cols} columns but vector has dimension {x.n}")
    out = tuple(sum(a * b for a, b in zip(row, x.coords)) % M.p for row in M.entries)
    return FpVec(M.p, out)


def hom_from_basis_images(images: Sequence[FpVec]) -> FpMatrix:
    """The matrix sending e_j to images[j-1]: images form the columns."""
    if not images:
        raise ValueError("need at least one basis image")
    head = images[0]
    for v in images:
        head._check_compat(v)
    k = head.n
    rows = tuple(tuple(images[j].coords[i] for j in range(len(images))) for i in range(k))
    return FpMatrix(head.p, rows)


def rref_rank(M: FpMatrix) -> tuple[FpMatrix, int]:
    """The unique reduced row-echelon form of M over F_p, plus its rank."""
    p = M.p
    rows = [list(r) for r in M.entries]
    nrows, ncols = M.rows, M.cols
    pivot_row = 0
    for col in range(ncols):
        pr = None
        for r in range(pivot_row, nrows):
            if rows[r][col] != 0:
                pr = r
                break
        if pr is None:
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        inv = pow(rows[pivot_row][col], p - 2, p)
        rows[pivot_row] = [(inv * c) % p for c in rows[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return FpMatrix(p, tuple(tuple(r) for r in rows)), pivot_row


def kernel_basis(M: FpMatrix) -> list[FpVec]:
    """A basis of {x : Mx = 0}, ordered by ascending free variable index."""
    p = M.p
    R, rank = rref_rank(M)
    ncols = M.cols
    pivots: list[int] = []
    for r in range(rank):
        for c in range(ncols):
            if R.entries[r][c] != 0:
                pivots.append(c)
                break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-R.entries[r][free]) % p
        basis.append(FpVec(p, tuple(v)))
    return basis


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def all_vectors(p: int, n: int) -> Iterator[FpVec]:
    """All elements of F_p^n in lexicographic order."""
    check_order(p, n)
    for coords in itertools.product(range(p), repeat=n):
        yield FpVec(p, coords)


def _is_full_rank_rref(M: FpMatrix) -> bool:
    # Structural check: pivots are 1, strictly right-moving, alone in their column.
    last_pivot = -1
    pivots = []
    for row in M.entries:
        pc = next((j for j, c in enumerate(row) if c != 0), None)
        if pc is None or pc <= last_pivot or row[pc] != 1:
            return False
        pivots.append(pc)
        last_pivot = pc
    for i, pc in enumerate(pivots):
        if any(M.entries[r][pc] != 0 for r in range(M.rows) if r != i):
            return False
    return True


@dataclass(frozen=True)
class Subgroup:
    """A codimension-k subgroup of F_p^n, as the kernel of a canonical annihilator.

    The annihilator is a full-rank k x n matrix in reduced row-echelon form,
    so equal subgroups compare equal as values.
    """

    p: int
    n: int
    annihilator: FpMatrix

    def __post_init__(self):
        A = self.annihilator
        if A.p != self.p:
            raise ValueError("annihilator modulus mismatch")
        if A.rows and A.cols != self.n:
            raise ValueError("annihilator width differs from ambient dimension")
        if not _is_full_rank_rref(A):
            raise ValueError("annihilator must be full-rank and in RREF; use from_dual_vectors")

    @classmethod
    def from_dual_vectors(cls, xis: Sequence[DualVec], *, p: int, n: int) -> Subgroup:
        """The subgroup cut out by the given characters (zero rows dropped)."""
        rows = [xi for xi in xis if not xi.is_zero()]
        if not rows:
            return cls.whole_group(p, n)
        R, rank = rref_rank(FpMatrix.from_rows(rows))
        return cls(p, n, FpMatrix(p, R.entries[:rank]))

    @classmethod
    def whole_group(cls, p: int, n: int) -> Subgroup:
        return cls(p, n, FpMatrix(p, ()))

    @property
    def codim(self) -> int:
        return self.annihilator.rows

    @property
    def is_whole_group(self) -> bool:
        return self.codim == 0

    def contains(self, x: FpVec) -> bool:
        if x.p != self.p or x.n != self.n:
            raise ValueError("vector does not live in the ambient group")
        return all(
            sum(a * b for a, b in zip(row, x.coords)) % self.p == 0
            for row in self.annihilator.entries
        )

    def elements(self) -> Iterator[FpVec]:
        """All p^(n-k) elements, deterministically ordered."""
        check_order(self.p, self.n - self.codim)
        if self.codim == 0:
            yield from all_vectors(self.p, self.n)
            return
        basis = kernel_basis(self.annihilator)
        for coeffs in itertools.product(range(self.p), repeat=len(basis)):
            yield linear_combination(coeffs, basis, p=self.p, n=self.n)


def subgroup_contains(H: Subgroup, x: FpVec) -> bool:
    return H.contains(x)


def _rref_full_rank_matrices(p: int, n: int, k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All full-rank k x n RREF matrices over F_p (one per k-dim row space)."""
    for pivots in itertools.combinations(range(n), k):
        # Free cells: non-pivot columns to the right of each row's pivot.
        free_cells = [
            (i, j)
            for i in range(k)
            for j in range(n)
            if j > pivots[i] and j not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free_cells)):
            rows = [[0] * n for _ in range(k)]
            for i in range(k):
                rows[i][pivots[i]] = 1
            for (i, j), v in zip(free_cells, values):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def enum_codim_subgroups(p: int, n: int, k: int) -> Iterator[Subgroup]:
    """All codimension-k subgroups of F_p^n, in lex order of canonical annihilators.

    Yields each subgroup exactly once; the count is the Gaussian binomial
    coefficient C(n, k)_p.
    """
    check_prime(p)
    if not 0 <= k <= n:
        raise ValueError(f"codimension {k} out of range [0, {n}]")
    if k == 0:
        yield Subgroup.whole_group(p, n)
        return
    mats = sorted(_rref_full_rank_matrices(p, n, k))
    for entries in mats:
        yield Subgroup(p, n, FpMatrix(p, entries))
