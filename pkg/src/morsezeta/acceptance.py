"""End-to-end acceptance checks over the built-in catalog.

Each ``criterion_*`` function returns a :class:`CriterionResult`; ``run_all``
runs them in order.  The checks lean on oracles that do not share code with
the paths they test: Laplace expansion for determinants, the Seifert-matrix
formula for pretzel-knot Alexander polynomials, and series expansions built
from matrix powers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import catalog
from .invariants import census, characteristic_polynomial, flow_entry, torsion, verify_identity, zeta
from .monodromy import MonodromyMatrix, SurfaceKind, matmul, random_symplectic, symplectic_form, validate
from .polyalg import (
    DEFAULT_ORDER,
    ONE_MINUS_T,
    IntPolynomial,
    RationalFunction,
    TruncatedSeries,
    adjugate,
    det_bareiss,
    poly_matmul,
    series_exp,
    series_log,
)

__all__ = [
    "CriterionResult",
    "cofactor_det",
    "pretzel_alexander",
    "random_monodromies",
    "CRITERIA",
    "run_all",
]


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""

    def __str__(self):
        mark = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{mark}] criterion {self.number}: {self.title}{tail}"


def P(*coeffs: int) -> IntPolynomial:
    return IntPolynomial(coeffs)


def R(num, den=1) -> RationalFunction:
    return RationalFunction(num, den)


def cofactor_det(M) -> IntPolynomial:
    """Determinant by Laplace expansion along the first row (oracle only)."""
    n = len(M)
    if n == 0:
        return P(1)
    if n == 1:
        return IntPolynomial([M[0][0]]) if isinstance(M[0][0], int) else M[0][0]
    total = IntPolynomial()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = cofactor_det(minor) * M[0][j]
        total = total - term if j % 2 else total + term
    return total


def pretzel_alexander(p: int, q: int, r: int) -> IntPolynomial:
    """Alexander polynomial of the odd pretzel knot P(p, q, r) as det(V - t V^T).

    V is the genus-one Seifert matrix ((p+q)/2, (q+1)/2; (q-1)/2, (q+r)/2).
    """
    if not all(x % 2 for x in (p, q, r)):
        raise ValueError("pretzel parameters must all be odd")
    V = [[(p + q) // 2, (q + 1) // 2], [(q - 1) // 2, (q + r) // 2]]
    M = [[P(V[i][j], -V[j][i]) for j in range(2)] for i in range(2)]
    return cofactor_det(M)


def random_monodromies(count: int = 50, seed: int = 2024) -> list[MonodromyMatrix]:
    """Random symplectic monodromies of genus 1..3 with random handle numbers."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(1, 3)
        k = rng.randint(0, m)
        rows = random_symplectic(m, rng, factors=rng.randint(2, 8))
        out.append(MonodromyMatrix(m, k, SurfaceKind.ONCE_PUNCTURED, rows))
    return out


def _fail(n, title, detail) -> CriterionResult:
    return CriterionResult(n, title, False, detail)


def criterion_1(order: int = DEFAULT_ORDER) -> CriterionResult:
    title = "trefoil zeta and torsion"
    G = catalog.trefoil().monodromy
    z, t = zeta(G, order).rational, torsion(G, order).rational
    if z != R(P(1, -1, 1), ONE_MINUS_T):
        return _fail(1, title, f"zeta = {z}")
    if t != R(1):
        return _fail(1, title, f"tau = {t}")
    return CriterionResult(1, title, True, f"zeta = {z}, tau = {t}")


def criterion_2(order: int = DEFAULT_ORDER) -> CriterionResult:
    title = "twist knots n = 2..10"
    for n in range(2, 11):
        G = catalog.twist_knot(n).monodromy
        z, t = zeta(G, order).rational, torsion(G, order).rational
        if z != R(ONE_MINUS_T ** 3):
            return _fail(2, title, f"n={n}: zeta = {z}")
        if t != R(P(-n, 2 * n - 1, -n), ONE_MINUS_T ** 4):
            return _fail(2, title, f"n={n}: tau = {t}")
    return CriterionResult(2, title, True, "9 knots")


def criterion_3(order: int = DEFAULT_ORDER) -> CriterionResult:
    title = "pretzel (5,5,5) zeta, D_ij and torsion"
    G = catalog.pretzel_555().monodromy
    expected = {
        (1, 1): R(-5, ONE_MINUS_T ** 2),
        (2, 2): R(-5, ONE_MINUS_T ** 2),
        (1, 2): R(P(-2, 3), ONE_MINUS_T ** 3),
        (2, 1): R(P(-3, 2), ONE_MINUS_T ** 3),
    }
    z = zeta(G, order).rational
    if z != R(ONE_MINUS_T ** 5):
        return _fail(3, title, f"zeta = {z}")
    for (i, j), want in expected.items():
        got = flow_entry(G, i, j)
        if got != want:
            return _fail(3, title, f"D_{i}{j} = {got}, expected {want}")
    t = torsion(G, order).rational
    if t != R(P(19, -37, 19), ONE_MINUS_T ** 6):
        return _fail(3, title, f"tau = {t}")
    return CriterionResult(3, title, True)


def criterion_4(order: int = DEFAULT_ORDER) -> CriterionResult:
    title = "tau * zeta * (1 - t) equals the Alexander polynomial"
    oracle = pretzel_alexander(5, 5, 5)
    stored = catalog.pretzel_555().alexander
    if oracle != stored:
        return _fail(4, title, f"Seifert oracle {oracle} disagrees with stored {stored}")
    records = catalog.builtins()
    for rec in records:
        rep = verify_identity(rec, order)
        if not rep.exact:
            return _fail(4, title, str(rep))
    return CriterionResult(4, title, True, f"{len(records)} records")


def criterion_5(order: int = DEFAULT_ORDER) -> CriterionResult:
    title = "series oracles agree with closed forms"
    for rec in catalog.builtins():
        G = rec.monodromy
        z = zeta(G, order)
        if z.series != z.rational.series(order):
            return _fail(5, title, f"{rec.name}: zeta series")
        rep = census(G, order)
        m = G.genus
        powers = [None]
        Pn = G.entries
        for _ in range(order):
            powers.append(Pn)
            Pn = matmul(Pn, G.entries)
        for i in range(1, G.handles + 1):
            for j in range(1, G.handles + 1):
                s = flow_entry(G, i, j).series(order)
                for n in range(1, order + 1):
                    if s[n - 1] != powers[n][i - 1][m + j - 1]:
                        return _fail(5, title, f"{rec.name}: D_{i}{j} at t^{n - 1}")
                if rep.flow_series(i, j) != s:
                    return _fail(5, title, f"{rec.name}: census D_{i}{j}")
        t = torsion(G, order)
        if t.series != t.rational.series(order):
            return _fail(5, title, f"{rec.name}: torsion series")
    return CriterionResult(5, title, True, f"N = {order}")


def _structural_failure(G: MonodromyMatrix, order: int) -> str | None:
    J = symplectic_form(G.genus)
    GT = tuple(zip(*G.entries))
    if matmul(matmul(GT, J), G.entries) != J:
        return "G^T J G != J"
    if cofactor_det([[P(x) for x in row] for row in G.entries]) != P(1):
        return "det G != 1"
    if not validate(G).ok:
        return "validate() rejects"
    cp = characteristic_polynomial(G)
    if cp(0) != 1:
        return "det(I - tG) has constant term != 1"
    coeffs = [cp[i] for i in range(G.size + 1)]
    if coeffs != coeffs[::-1]:
        return f"det(I - tG) = {cp} is not palindromic"
    if not zeta(G, order).series.is_integral():
        return "zeta series not integral"
    if not torsion(G, order).series.is_integral():
        return "torsion series not integral"
    return None


def criterion_6(order: int = DEFAULT_ORDER, random_count: int = 50) -> CriterionResult:
    title = "structural suite"
    mats = [r.monodromy for r in catalog.builtins()] + random_monodromies(random_count)
    for idx, G in enumerate(mats):
        why = _structural_failure(G, order)
        if why:
            return _fail(6, title, f"matrix #{idx}: {why}")
    return CriterionResult(6, title, True, f"{len(mats)} matrices")


def _random_poly(rng: random.Random, deg: int) -> IntPolynomial:
    return IntPolynomial(rng.randint(-3, 3) for _ in range(deg + 1))


def criterion_7(order: int = DEFAULT_ORDER, trials: int = 20, seed: int = 7) -> CriterionResult:
    title = "kernel oracles"
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, 4)
        M = [[_random_poly(rng, 2) for _ in range(n)] for _ in range(n)]
        if det_bareiss(M) != cofactor_det(M):
            return _fail(7, title, f"det_bareiss != cofactor on {n}x{n}")
    for n in range(1, 7):
        M = [[_random_poly(rng, 1) for _ in range(n)] for _ in range(n)]
        d = det_bareiss(M)
        prod = poly_matmul(M, adjugate(M))
        want = [[d if i == j else IntPolynomial() for j in range(n)] for i in range(n)]
        if prod != want:
            return _fail(7, title, f"M adj(M) != det(M) I at size {n}")
    for _ in range(trials):
        s = TruncatedSeries(
            [0] + [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order - 1)]
        )
        if series_log(series_exp(s)) != s:
            return _fail(7, title, "log(exp(s)) != s")
        f = series_exp(s)
        if series_exp(series_log(f)) != f:
            return _fail(7, title, "exp(log(f)) != f")
    return CriterionResult(7, title, True)


CRITERIA: dict[int, Callable[..., CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
}


def run_all(order: int = DEFAULT_ORDER) -> list[CriterionResult]:
    results = []
    for number, fn in CRITERIA.items():
        try:
            results.append(fn(order))
        except Exception as exc:  # any crash is a failed criterion, not an abort
            results.append(_fail(number, fn.__name__, f"{type(exc).__name__}: {exc}"))
    return results
