"""Monodromy matrices of first-return maps on H_1 of a level surface.

A monodromy matrix ``G`` is a 2m x 2m integer matrix written in the ordered
basis (c_1, ..., c_m, d_1, ..., d_m) with c_i . d_i = 1.  Row ``i`` lists the
coordinates of the image of the i-th basis class, so the image of a class
with row vector ``u`` is ``u @ G``.  The intersection form in this basis is
``J = [[0, I], [-I, 0]]`` and a valid monodromy satisfies ``G^T J G = J``.

The first ``handles`` basis pairs are the classes coming from the attaching
1-handles; flow-line counts are read from the (c_i, d_j) block with
``i, j <= handles``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

__all__ = [
    "SurfaceKind",
    "MonodromyMatrix",
    "HomologyClass",
    "Check",
    "ValidationReport",
    "InvalidMonodromy",
    "validate",
    "require_valid",
    "matrix_power",
    "trace_power",
    "lefschetz_number",
    "intersection_pairing",
    "symplectic_form",
    "push_forward",
    "matmul",
    "identity",
    "elementary_symplectic",
    "random_symplectic",
]

Matrix = tuple[tuple[int, ...], ...]


class SurfaceKind(enum.Enum):
    """Topological type of the level surface."""

    ONCE_PUNCTURED = "punctured"
    CLOSED = "closed"

    @property
    def euler_constant(self) -> int:
        """trace on H_0 plus trace on H_2: 1 when punctured, 2 when closed."""
        return 1 if self is SurfaceKind.ONCE_PUNCTURED else 2


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*A))


def symplectic_form(m: int) -> Matrix:
    """J = [[0, I_m], [-I_m, 0]] for the basis order (c_1..c_m, d_1..d_m)."""
    n = 2 * m
    J = [[0] * n for _ in range(n)]
    for i in range(m):
        J[i][m + i] = 1
        J[m + i][i] = -1
    return tuple(map(tuple, J))


def _int_det(A: Sequence[Sequence[int]]) -> int:
    # Bareiss over Z
    M = [list(r) for r in A]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class MonodromyMatrix:
    """Integer monodromy matrix with its genus, handle number and surface kind.

    Construction only normalizes the entries to a tuple of int tuples; use
    :func:`validate` to check the structural and symplectic invariants.
    """

    genus: int
    handles: int
    kind: SurfaceKind
    entries: Matrix = field(repr=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not isinstance(self.kind, SurfaceKind):
            object.__setattr__(self, "kind", SurfaceKind(self.kind))

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        handles: int = 0,
        kind: SurfaceKind = SurfaceKind.ONCE_PUNCTURED,
    ) -> "MonodromyMatrix":
        """Build from a square matrix, inferring genus as half its size."""
        return cls(genus=len(rows) // 2, handles=handles, kind=kind, entries=rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    @cached_property
    def report(self) -> "ValidationReport":
        return validate(self)

    def power(self, n: int) -> Matrix:
        return matrix_power(self, n)

    def with_entries(self, rows: Sequence[Sequence[int]]) -> "MonodromyMatrix":
        return MonodromyMatrix(self.genus, self.handles, self.kind, rows)


@dataclass(frozen=True)
class HomologyClass:
    """Integer coordinate vector in the basis (c_1..c_m, d_1..d_m)."""

    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(x) for x in self.coords)
        if len(coords) % 2:
            raise ValueError("homology class must have even length 2m")
        object.__setattr__(self, "coords", coords)

    @property
    def genus(self) -> int:
        return len(self.coords) // 2

    @classmethod
    def c(cls, i: int, genus: int) -> "HomologyClass":
        """The basis class c_i (1-based)."""
        v = [0] * (2 * genus)
        v[i - 1] = 1
        return cls(tuple(v))

    @classmethod
    def d(cls, i: int, genus: int) -> "HomologyClass":
        """The basis class d_i (1-based)."""
        v = [0] * (2 * genus)
        v[genus + i - 1] = 1
        return cls(tuple(v))


# ------------------------------------------------------------------ validation


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


class InvalidMonodromy(ValueError):
    """Raised when an invariant is requested for a matrix that fails validation."""

    def __init__(self, report: ValidationReport):
        self.report = report
        lines = "; ".join(str(c) for c in report.failures)
        super().__init__(f"invalid monodromy matrix: {lines}")


def validate(G: MonodromyMatrix) -> ValidationReport:
    """Run every structural check on ``G`` and itemize the results.

    Checks are: square shape of even size 2m, genus consistent with that size,
    ``0 <= handles <= genus``, ``G^T J G = J``, and ``det G = 1``.  Later
    checks that need a well-shaped matrix are reported as failed (with the
    reason) when the shape check fails, never silently skipped.
    """
    rows = G.entries
    n = len(rows)
    checks = []

    square = n > 0 and all(len(r) == n for r in rows)
    if not square:
        checks.append(Check("square", False, "matrix must be square and nonempty"))
    else:
        checks.append(Check("square", True))
    even = square and n % 2 == 0
    if square:
        checks.append(
            Check("even size", even, "" if even else f"matrix size must be even, got {n}x{n}")
        )
    genus_ok = even and G.genus == n // 2 and G.genus >= 1
    checks.append(
        Check(
            "genus matches size",
            genus_ok,
            "" if genus_ok else f"genus {G.genus} does not match a {n}x{n} matrix",
        )
    )
    h_ok = 0 <= G.handles <= G.genus
    checks.append(
        Check(
            "handles <= genus",
            h_ok,
            "" if h_ok else f"handle number {G.handles} outside 0..{G.genus}",
        )
    )

    if not genus_ok:
        checks.append(Check("symplectic", False, "not evaluated: shape is invalid"))
        checks.append(Check("unit determinant", False, "not evaluated: shape is invalid"))
        return ValidationReport(tuple(checks))

    m = G.genus
    J = symplectic_form(m)
    lhs = matmul(matmul(transpose(rows), J), rows)
    bad = [(i, j) for i in range(n) for j in range(n) if lhs[i][j] != J[i][j]]
    if bad:
        i, j = bad[0]
        detail = (
            f"(G^T J G)[{i + 1},{j + 1}] = {lhs[i][j]}, expected {J[i][j]}"
            f" ({len(bad)} violated entries)"
        )
        checks.append(Check("symplectic", False, detail))
    else:
        checks.append(Check("symplectic", True))

    det = _int_det(rows)
    checks.append(Check("unit determinant", det == 1, "" if det == 1 else f"det G = {det}"))
    return ValidationReport(tuple(checks))


def require_valid(G: MonodromyMatrix) -> MonodromyMatrix:
    report = G.report
    if not report.ok:
        raise InvalidMonodromy(report)
    return G


# ------------------------------------------------------------------ powers and traces


def matrix_power(G: MonodromyMatrix, n: int) -> Matrix:
    """G**n by repeated squaring; G**0 is the identity."""
    if n < 0:
        raise ValueError("matrix power must be non-negative")
    result = identity(G.size)
    base = G.entries
    while n:
        if n & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        n >>= 1
    return result


def trace_power(G: MonodromyMatrix, n: int) -> int:
    P = matrix_power(G, n)
    return sum(P[i][i] for i in range(len(P)))


def lefschetz_number(G: MonodromyMatrix, n: int) -> int:
    """Lefschetz number L(g**n) = e - trace(G**n), e from the surface kind."""
    if n < 1:
        raise ValueError("Lefschetz number is only defined here for n >= 1")
    return G.kind.euler_constant - trace_power(G, n)


def intersection_pairing(u: HomologyClass, v: HomologyClass) -> int:
    """Algebraic intersection u . v = u^T J v, with c_i . d_i = +1."""
    if len(u.coords) != len(v.coords):
        raise ValueError(
            f"dimension mismatch: {len(u.coords)} vs {len(v.coords)}"
        )
    m = u.genus
    a, b = u.coords, v.coords
    return sum(a[i] * b[m + i] - a[m + i] * b[i] for i in range(m))


def push_forward(G: MonodromyMatrix | Sequence[Sequence[int]], u: HomologyClass) -> HomologyClass:
    """Image of ``u`` under the map whose rows are the images of basis classes."""
    rows = G.entries if isinstance(G, MonodromyMatrix) else G
    if len(rows) != len(u.coords):
        raise ValueError("dimension mismatch")
    return HomologyClass(tuple(matmul([u.coords], rows)[0]))


# ------------------------------------------------------------------ random symplectic


def elementary_symplectic(m: int, kind: str, i: int, j: int, s: int) -> Matrix:
    """One of the standard generators of Sp(2m, Z).

    ``kind`` is ``"upper"`` ([[I, S], [0, I]]), ``"lower"`` ([[I, 0], [S, I]])
    with S the symmetric matrix s*(E_ij + E_ji) (or s*E_ii when i == j), or
    ``"diag"`` ([[A, 0], [0, A^-T]]) with A = I + s*E_ij, i != j.
    """
    n = 2 * m
    M = [list(r) for r in identity(n)]
    if kind == "upper":
        M[i][m + j] += s
        if i != j:
            M[j][m + i] += s
    elif kind == "lower":
        M[m + i][j] += s
        if i != j:
            M[m + j][i] += s
    elif kind == "diag":
        if i == j:
            raise ValueError("diag generator needs i != j")
        M[i][j] += s
        M[m + j][m + i] -= s
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    return tuple(map(tuple, M))


def random_symplectic(
    m: int, rng: random.Random, factors: int = 6, max_step: int = 2
) -> Matrix:
    """Product of ``factors`` random elementary symplectic generators."""
    M = identity(2 * m)
    kinds = ["upper", "lower"] + (["diag"] if m > 1 else [])
    for _ in range(factors):
        kind = rng.choice(kinds)
        i = rng.randrange(m)
        j = rng.randrange(m)
        if kind == "diag":
            while j == i:
                j = rng.randrange(m)
        s = rng.choice([x for x in range(-max_step, max_step + 1) if x])
        M = matmul(M, elementary_symplectic(m, kind, i, j, s))
    return M
