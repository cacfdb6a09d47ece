"""Deterministic low-dimensional linear programming.

Seidel's randomized incremental algorithm for up to three unknowns, with the
shuffle drawn from a fixed linear congruential generator so that every run of
the program visits constraints in the same order.  Expected linear time in the
number of constraints; the violation scan is vectorized so instances with a
few thousand constraints (the arc-approximated families) stay cheap.

Problems are  min c.x  s.t.  A x <= b  inside a box |x_i| <= bound.  The box
keeps every subproblem bounded; callers choose `bound` large enough that it is
never active at a true optimum.
"""

from __future__ import annotations

import numpy as np

from .errors import LPFailure

_FEAS_EPS = 1e-11


def _lcg_permutation(n: int, seed: int = 0x5EED) -> np.ndarray:
    """Fisher-Yates shuffle driven by a fixed 64-bit LCG (run-independent)."""
    state = (seed ^ (n * 0x9E3779B97F4A7C15)) & 0xFFFFFFFFFFFFFFFF
    perm = np.arange(n)
    for i in range(n - 1, 0, -1):
        state = (6364136223846793005 * state + 1442695040888963407) & 0xFFFFFFFFFFFFFFFF
        j = (state >> 33) % (i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm


def _solve_1d(c: float, A: np.ndarray, b: np.ndarray, bound: float) -> float:
    lo, hi = -bound, bound
    if len(A):
        a = A[:, 0]
        pos = a > _FEAS_EPS
        neg = a < -_FEAS_EPS
        if np.any(pos):
            hi = min(hi, float(np.min(b[pos] / a[pos])))
        if np.any(neg):
            lo = max(lo, float(np.max(b[neg] / a[neg])))
        flat = ~pos & ~neg
        if np.any(b[flat] < -1e-9):
            raise LPFailure("1-d subproblem infeasible")
    if lo > hi + 1e-9:
        raise LPFailure("1-d subproblem infeasible")
    hi = max(hi, lo)
    if c > 0.0:
        return lo
    if c < 0.0:
        return hi
    return lo  # tie: lexicographically smallest


def _eliminate(plane_a: np.ndarray, plane_b: float, A: np.ndarray,
               b: np.ndarray, c: np.ndarray, bound: float):
    """Substitute the hyperplane plane_a . x = plane_b into (A, b, c).

    Returns reduced (A', b', c', k, coef) where x_k was eliminated and
    x_k = (plane_b - sum_{j!=k} plane_a[j] x_j) / plane_a[k].
    """
    k = int(np.argmax(np.abs(plane_a)))
    ak = plane_a[k]
    rest = [j for j in range(len(plane_a)) if j != k]
    ratio = plane_a[rest] / ak
    A_red = A[:, rest] - np.outer(A[:, k], ratio)
    b_red = b - A[:, k] * (plane_b / ak)
    c_red = c[rest] - c[k] * ratio
    # box of the eliminated variable becomes two ordinary constraints
    A_box = np.vstack((-ratio, ratio))
    b_box = np.array([bound - plane_b / ak, bound + plane_b / ak])
    return np.vstack((A_red, A_box)), np.concatenate((b_red, b_box)), c_red, k, (rest, ratio, plane_b / ak)


def _back_substitute(x_red: np.ndarray, k: int, info) -> np.ndarray:
    rest, ratio, const = info
    x = np.empty(len(rest) + 1)
    x[rest] = x_red
    x[k] = const - float(ratio @ x_red)
    return x


def _solve(c: np.ndarray, A: np.ndarray, b: np.ndarray, bound: float) -> np.ndarray:
    d = len(c)
    if d == 1:
        return np.array([_solve_1d(float(c[0]), A.reshape(-1, 1), b, bound)])
    # start at the box corner minimizing c (ties toward the lower corner)
    x = np.where(c > 0.0, -bound, np.where(c < 0.0, bound, -bound)).astype(float)
    m = len(A)
    pos = 0
    while pos < m:
        resid = A[pos:] @ x - b[pos:]
        bad = np.nonzero(resid > _FEAS_EPS * np.maximum(1.0, np.abs(b[pos:])))[0]
        if len(bad) == 0:
            break
        i = pos + int(bad[0])
        # optimum of constraints[:i+1] lies on constraint i
        A_red, b_red, c_red, k, info = _eliminate(A[i], b[i], A[:i], b[:i], c, bound)
        x = _back_substitute(_solve(c_red, A_red, b_red, bound), k, info)
        pos = i + 1
    return x


def solve_lp(c, A, b, bound: float = 1e6) -> np.ndarray:
    """Minimize c.x subject to A x <= b and |x_i| <= bound.

    Deterministic: constraints are visited in a fixed pseudo-random order.
    Raises LPFailure when the system is infeasible.
    """
    c = np.asarray(c, dtype=float)
    A = np.asarray(A, dtype=float).reshape(-1, len(c))
    b = np.asarray(b, dtype=float).reshape(-1)
    if len(A):
        perm = _lcg_permutation(len(A))
        A, b = A[perm], b[perm]
    return _solve(c, A, b, bound)


def solve_lp_lex(c, A, b, bound: float = 1e6,
                 face_tol: float = 1e-11) -> tuple[float, np.ndarray]:
    """Minimize c.x, then pick the lexicographically smallest optimizer.

    Returns (optimal value, point).  The optimal face is explored by re-solving
    with the objective value pinned within face_tol, so the returned point is
    lexicographically minimal up to that slack.
    """
    c = np.asarray(c, dtype=float)
    A = np.asarray(A, dtype=float).reshape(-1, len(c))
    b = np.asarray(b, dtype=float).reshape(-1)
    x = solve_lp(c, A, b, bound)
    value = float(c @ x)
    slack = face_tol * max(1.0, abs(value))
    A_cur = np.vstack((A, c[None, :]))
    b_cur = np.append(b, value + slack)
    for axis in range(len(c)):
        e = np.zeros(len(c))
        e[axis] = 1.0
        x = solve_lp(e, A_cur, b_cur, bound)
        A_cur = np.vstack((A_cur, e[None, :]))
        b_cur = np.append(b_cur, float(x[axis]) + slack)
    return value, x
