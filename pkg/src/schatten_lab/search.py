"""Search helpers shared by the norm and predicate modules.

Three optimization shapes recur across the package:

* maximize a continuous function of a unimodular phase (parallelism,
  numerical radius) -- dense grid plus golden-section refinement;
* minimize a convex function over a complex scalar (Birkhoff-James
  orthogonality) -- coarse polar grid plus Nelder-Mead refinement;
* maximize a functional over a norm sphere (induced norms, Banach radius,
  norm attainment sets) -- seeded multistart ascent.

Every routine is deterministic for a fixed seed; multistart reductions keep
the earliest start on ties so results do not depend on iteration order.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import minimize

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0

TWO_PI = 2.0 * np.pi


def golden_section_max(f, lo: float, hi: float, tol: float = 1e-12,
                       max_iter: int = 200) -> tuple[float, float]:
    """Maximize ``f`` on ``[lo, hi]`` by golden-section; returns (x, f(x)).

    Tracks the best evaluated point, so the result never falls below the
    value at any probe even when ``f`` is flat or multimodal on the bracket.
    """
    a, b = float(lo), float(hi)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    if fc >= fd:
        best_x, best_v = c, fc
    else:
        best_x, best_v = d, fd
    for _ in range(max_iter):
        if (b - a) <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
            if fc > best_v:
                best_x, best_v = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
            if fd > best_v:
                best_x, best_v = d, fd
    return best_x, best_v


def circle_max(f_batch, f_scalar, grid: int = 720, windows: int = 3,
               tol: float = 1e-12) -> tuple[float, float]:
    """Maximize ``theta -> f(theta)`` over [0, 2pi).

    ``f_batch`` evaluates an array of angles at once; ``f_scalar`` a single
    angle.  The top ``windows`` circular local maxima of the grid are each
    refined by golden-section over one grid spacing on either side.
    """
    thetas = np.linspace(0.0, TWO_PI, grid, endpoint=False)
    vals = np.asarray(f_batch(thetas), dtype=float)
    left = np.roll(vals, 1)
    right = np.roll(vals, -1)
    local = np.nonzero((vals >= left) & (vals >= right))[0]
    if local.size == 0:
        local = np.array([int(np.argmax(vals))])
    order = local[np.argsort(vals[local])[::-1]]
    delta = TWO_PI / grid
    k0 = int(np.argmax(vals))
    best_t, best_v = float(thetas[k0]), float(vals[k0])
    for k in order[:windows]:
        t, v = golden_section_max(f_scalar, thetas[k] - delta, thetas[k] + delta, tol)
        if v > best_v:
            best_t, best_v = t, v
    return best_t % TWO_PI, best_v


def gamma_min(f_batch, f_scalar, radius: float, grid_r: int = 32,
              grid_t: int = 32) -> tuple[complex, float]:
    """Minimize a convex ``gamma -> f(gamma)`` over the complex plane.

    Coarse polar grid out to ``radius`` (origin included), then Nelder-Mead
    from the best grid point.  Convexity makes the refined local minimum
    global, so the grid only needs to land in the right basin.
    """
    radii = radius * np.arange(1, grid_r + 1) / grid_r
    angles = np.linspace(0.0, TWO_PI, grid_t, endpoint=False)
    gammas = np.concatenate(
        [[0j], (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()]
    )
    vals = np.asarray(f_batch(gammas), dtype=float)
    k = int(np.argmin(vals))
    g0, v0 = complex(gammas[k]), float(vals[k])

    h = max(radius / grid_r, 1e-12)
    x0 = np.array([g0.real, g0.imag])
    simplex = np.array([x0, x0 + [h, 0.0], x0 + [0.0, h]])
    res = minimize(
        lambda z: f_scalar(complex(z[0], z[1])),
        x0,
        method="Nelder-Mead",
        options={
            "initial_simplex": simplex,
            "xatol": 1e-10 * (1.0 + radius),
            "fatol": 1e-13 * (1.0 + abs(v0)),
            "maxiter": 800,
            "maxfev": 800,
        },
    )
    if res.fun < v0:
        return complex(res.x[0], res.x[1]), float(res.fun)
    return g0, v0


def sphere_starts(n: int, count: int, seed: int, real: bool = False) -> np.ndarray:
    """Deterministic batch of random directions in R^n or C^n (unnormalized)."""
    rng = np.random.default_rng(np.random.SeedSequence([0x5EED, seed, n, count]))
    if real:
        return rng.standard_normal((count, n)) + 0j
    return rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))


def multistart_ascent(value_fn, grad_fn, normalize_fn, n: int, *, starts: int = 64,
                      max_steps: int = 500, seed: int = 0, real: bool = False,
                      extra_starts=None) -> tuple[float, np.ndarray]:
    """Projected gradient ascent with backtracking from seeded random starts.

    ``grad_fn`` returns an ascent direction (Wirtinger gradient with respect
    to conj(x) for complex problems).  Steps are renormalized through
    ``normalize_fn``; only improving steps are accepted.  The best start wins,
    ties resolved in favor of the earliest start index.
    """
    pts = list(sphere_starts(n, starts, seed, real))
    if extra_starts is not None:
        pts = [np.asarray(e, dtype=complex) for e in extra_starts] + pts
    best_v = -np.inf
    best_x = None
    for x0 in pts:
        x = normalize_fn(x0)
        v = value_fn(x)
        step = 0.5
        stall = 0
        for _ in range(max_steps):
            g = grad_fn(x)
            gn = np.linalg.norm(g)
            if not np.isfinite(gn) or gn < 1e-300:
                break
            d = g / gn
            s = step
            gained = 0.0
            for _ in range(60):
                xn = normalize_fn(x + s * d)
                vn = value_fn(xn)
                if vn > v:
                    gained = vn - v
                    x, v = xn, vn
                    step = min(2.0 * s, 1.0)
                    break
                s *= 0.5
            if gained == 0.0:
                break
            if gained <= 1e-14 * max(abs(v), 1e-300):
                stall += 1
                if stall >= 3:
                    break
            else:
                stall = 0
        if v > best_v:
            best_v, best_x = v, x
    return float(best_v), best_x


def hill_climb(value_fn, normalize_fn, n: int, *, starts: int = 64, rounds: int = 64,
               proposals: int = 8, seed: int = 0, real: bool = False,
               extra_starts=None) -> tuple[float, np.ndarray, list[np.ndarray]]:
    """Gradient-free random-direction ascent for nonsmooth objectives.

    Shrinking step scales; at each scale a fixed budget of random directions
    is proposed and improvements accepted.  Returns the best value, the best
    point, and the limit point of every start (for attainment-set sampling).
    """
    rng = np.random.default_rng(np.random.SeedSequence([0xC11B, seed, n]))
    pts = list(sphere_starts(n, starts, seed, real))
    if extra_starts is not None:
        pts = [np.asarray(e, dtype=complex) for e in extra_starts] + pts
    limits = []
    best_v = -np.inf
    best_x = None
    for x0 in pts:
        x = normalize_fn(x0)
        v = value_fn(x)
        step = 1.0
        for _ in range(rounds):
            improved = False
            for _ in range(proposals):
                if real:
                    d = rng.standard_normal(n) + 0j
                else:
                    d = rng.standard_normal(n) + 1j * rng.standard_normal(n)
                xn = normalize_fn(x + step * d)
                vn = value_fn(xn)
                if vn > v:
                    x, v = xn, vn
                    improved = True
            if not improved:
                step *= 0.5
                if step < 1e-10:
                    break
        limits.append(x)
        if v > best_v:
            best_v, best_x = v, x
    return float(best_v), best_x, limits
