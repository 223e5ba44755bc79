"""
Characteristic roots of the reduced ring.

The poles solve (T_r s + 1)(T_p s + 1) exp(s tau) = lambda_k for each
eigenvalue lambda_k of the interaction matrix. Newton's method is run
from a grid of seeds over a search rectangle; for a retarded system
the rightmost root decides stability.
"""

__all__ = [
    "characteristic_roots",
    "default_search_rectangle",
    "test_roots",
]

import logging

import numpy

from cyclosc.errors import DomainError
from cyclosc.stability.verdict import (
    INCONCLUSIVE,
    LOCALLY_STABLE,
    OSCILLATIONS,
    Verdict,
    Witness,
)

log = logging.getLogger("cyclosc-logger")

MAX_NEWTON_STEPS = 100


def default_search_rectangle(rm):
    """
    Search rectangle Re in [-2/T_A, 2/T_A], Im in [0, 4 pi / tau]
    (Im in [0, 4/T_A] without delay).

    :param rm: ReducedModel
    :return: (re_min, re_max, im_min, im_max)
    """
    width = 2.0 / rm.T_A
    if rm.tau > 0.0:
        height = 4.0 * numpy.pi / rm.tau
    else:
        height = 4.0 / rm.T_A
    return (-width, width, 0.0, height)


def _newton(seeds, lam, t_r, t_p, tau, tol):
    s = seeds.copy()
    with numpy.errstate(all="ignore"):
        for _ in range(MAX_NEWTON_STEPS):
            first = t_r * s + 1.0
            second = t_p * s + 1.0
            expo = numpy.exp(s * tau)
            value = first * second * expo - lam
            slope = (t_r * second + t_p * first + tau * first * second) * expo
            step = value / slope
            s = s - step
            if numpy.all(~numpy.isfinite(s) | (numpy.abs(step) < 1e-14)):
                break
        first = t_r * s + 1.0
        second = t_p * s + 1.0
        residual = numpy.abs(first * second * numpy.exp(s * tau) - lam)
    good = numpy.isfinite(s) & (residual < tol)
    return s[good]


def _deduplicate(roots, distance):
    roots = numpy.unique(numpy.round(roots, 12))
    roots = roots[numpy.lexsort((-roots.imag, -roots.real))]
    kept = numpy.zeros(0, dtype=complex)
    for root in roots:
        if kept.size == 0 or numpy.min(numpy.abs(kept - root)) > distance:
            kept = numpy.append(kept, root)
    return kept


def characteristic_roots(rm, search=None, tol=1e-8, grid=40):
    """
    Roots of phi(s) exp(s tau) = lambda_k found from a seed grid.

    :param rm: ReducedModel
    :param search: (re_min, re_max, im_min, im_max) seed rectangle;
                   default_search_rectangle when None
    :param tol: residual tolerance of an accepted root
    :param grid: seeds per side of the rectangle
    :return: complex array, conjugates included, rightmost first;
             empty when no seed converged
    """
    if not tol > 0.0:
        raise DomainError(f"characteristic_roots: tol must be > 0, got {tol}")
    if search is None:
        search = default_search_rectangle(rm)
    re_min, re_max, im_min, im_max = search
    if not (re_min < re_max and im_min <= im_max):
        raise DomainError(
            f"characteristic_roots: Empty search rectangle {search}"
        )
    re_axis = numpy.linspace(re_min, re_max, grid)
    im_axis = numpy.linspace(im_min, im_max, grid)
    seeds = (re_axis[None, :] + 1j * im_axis[:, None]).ravel()

    found = []
    for lam in rm.lambda_:
        roots = _newton(seeds, lam, rm.T_r, rm.T_p, rm.tau, tol)
        found.append(roots)
        found.append(numpy.conj(roots))
    candidates = numpy.concatenate(found)
    if candidates.size == 0:
        log.warning("characteristic_roots: No seed converged")
        return candidates
    roots = _deduplicate(candidates, 10.0 * tol)
    log.debug(
        "characteristic_roots: %d distinct roots, dominant %s",
        roots.size,
        roots[0],
    )
    return roots


def test_roots(rm, tol=1e-8, search=None, grid=40):
    """
    Verdict from the sign of the rightmost characteristic root.

    :param rm: ReducedModel
    :param tol: Newton residual tolerance
    :param search: seed rectangle, see characteristic_roots
    :param grid: seeds per side
    :return: Verdict, margin = real part of the dominant root
    """
    common = dict(L=rm.L, Q=rm.Q, tau_tilde=rm.tau_tilde, N=rm.N)
    roots = characteristic_roots(rm, search=search, tol=tol, grid=grid)
    if roots.size == 0:
        return Verdict(
            outcome=INCONCLUSIVE,
            method="roots",
            note="no characteristic root converged",
            **common,
        )
    dominant = complex(roots[0])
    outcome = OSCILLATIONS if dominant.real > 0.0 else LOCALLY_STABLE
    return Verdict(
        outcome=outcome,
        method="roots",
        margin=dominant.real,
        witness=Witness(dominant_root=dominant),
        **common,
    )


# not a test case for pytest collection
test_roots.__test__ = False
