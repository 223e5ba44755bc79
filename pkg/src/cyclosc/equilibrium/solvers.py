"""
Unique equilibrium of a cyclic network and the linearised gains there.

The steady-state maps of the genes, composed around the loop, give a
scalar return map for the protein level of gene 0. With a negative loop
sign this map is monotone decreasing, so its fixed point is unique and
bisection on [0, U] finds it, U bounding every protein level.
"""

__all__ = [
    "Equilibrium",
    "homogeneous_equilibrium",
    "linear_gains",
    "loop_return_map",
    "solve_equilibrium",
    "upper_bracket",
]

import dataclasses
import logging

import numpy
from scipy import optimize

from cyclosc.errors import (
    ConvergenceError,
    DomainError,
    PositiveCycleError,
)
from cyclosc.network.hill import hill_eval

log = logging.getLogger("cyclosc-logger")

MAX_BISECTION_STEPS = 200


@dataclasses.dataclass(frozen=True)
class Equilibrium:
    """
    Fixed point of the network.

    :param r_star: mRNA levels, length N
    :param p_star: protein levels, length N
    :param zeta: Hill slopes f_i'(p*_{i-1}) in physical units
    :param residual: max |right-hand side| at the fixed point
    :param iterations: bisection steps used
    """

    r_star: numpy.ndarray
    p_star: numpy.ndarray
    zeta: numpy.ndarray
    residual: float
    iterations: int = 0

    def state(self):
        """Interleaved state [r0, p0, r1, p1, ...]"""
        return numpy.column_stack([self.r_star, self.p_star]).ravel()

    def to_dict(self):
        """JSON-ready dictionary"""
        return {
            "r_star": self.r_star.tolist(),
            "p_star": self.p_star.tolist(),
            "zeta": self.zeta.tolist(),
            "residual": self.residual,
        }


def _gene_steady_state(gene, p_in, nu):
    value, _ = hill_eval(gene.regulation, p_in, nu, gene.p0)
    r_level = (gene.beta * value + gene.alpha0) / gene.a
    return r_level, gene.c * r_level / gene.b


def _propagate(spec, p_first):
    """Steady-state levels around the loop starting from protein 0"""
    n_genes = spec.N
    r_star = numpy.zeros(n_genes)
    p_star = numpy.zeros(n_genes)
    p_star[0] = p_first
    for k in range(1, n_genes):
        r_star[k], p_star[k] = _gene_steady_state(
            spec.genes[k], p_star[k - 1], spec.nu
        )
    r_star[0], p_next = _gene_steady_state(
        spec.genes[0], p_star[n_genes - 1], spec.nu
    )
    return r_star, p_star, p_next


def loop_return_map(spec, p_first):
    """
    Protein level of gene 0 after one pass around the loop.

    :param spec: NetworkSpec
    :param p_first: protein level of gene 0, >= 0
    :return: new protein level of gene 0
    """
    return _propagate(spec, p_first)[2]


def upper_bracket(spec):
    """
    Upper bound on every steady-state protein level.

    :param spec: NetworkSpec
    :return: max_i c_i (beta_i + alpha0_i) / (a_i b_i)
    """
    return max(
        gene.c * (gene.beta + gene.alpha0) / (gene.a * gene.b)
        for gene in spec.genes
    )


def _residual(spec, r_star, p_star):
    worst = 0.0
    for k, gene in enumerate(spec.genes):
        value, _ = hill_eval(
            gene.regulation, p_star[k - 1], spec.nu, gene.p0
        )
        dr = -gene.a * r_star[k] + gene.beta * value + gene.alpha0
        dp = -gene.b * p_star[k] + gene.c * r_star[k]
        worst = max(worst, abs(dr), abs(dp))
    return worst


def linear_gains(spec, eq):
    """
    Hill slopes at the equilibrium, zeta_i = f_i'(p*_{i-1}).

    :param spec: NetworkSpec
    :param eq: Equilibrium of spec
    :return: numpy array of length N, sign matching each regulation
    """
    zeta = numpy.zeros(spec.N)
    for k, gene in enumerate(spec.genes):
        _, zeta[k] = hill_eval(
            gene.regulation, eq.p_star[k - 1], spec.nu, gene.p0
        )
    return zeta


def solve_equilibrium(spec, tol=1e-12, bracket=None):
    """
    Compute the unique equilibrium by bisection on the loop return map.

    :param spec: validated NetworkSpec
    :param tol: relative tolerance on the protein level of gene 0
    :param bracket: optional (lo, hi) inside [0, U] enclosing the root
    :return: Equilibrium
    """
    if spec.delta != -1:
        raise PositiveCycleError(
            "solve_equilibrium: Loop sign is +1, the fixed point need not "
            "be unique"
        )
    if not tol > 0.0:
        raise DomainError(
            f"solve_equilibrium: Tolerance must be > 0, got {tol}"
        )

    def _excess(x):
        return loop_return_map(spec, x) - x

    if bracket is None:
        lower, upper = 0.0, upper_bracket(spec)
    else:
        lower, upper = bracket

    g_lower = _excess(lower)
    iterations = 0
    if g_lower == 0.0:
        root = lower
    elif g_lower < 0.0:
        raise ConvergenceError(
            "solve_equilibrium: Return map lies below the diagonal at the "
            f"lower bracket end {lower}; loop sign is not negative"
        )
    else:
        if _excess(upper) > 0.0:
            raise ConvergenceError(
                "solve_equilibrium: Bracket "
                f"[{lower}, {upper}] does not enclose the fixed point"
            )
        try:
            root, result = optimize.bisect(
                _excess,
                lower,
                upper,
                xtol=1e-300,
                rtol=max(tol, 4.0 * numpy.finfo(float).eps),
                maxiter=MAX_BISECTION_STEPS,
                full_output=True,
            )
        except RuntimeError as err:
            raise ConvergenceError(
                f"solve_equilibrium: Bisection failed to reach tol={tol} "
                f"in {MAX_BISECTION_STEPS} steps"
            ) from err
        iterations = result.iterations

    r_star, p_star, _ = _propagate(spec, root)
    residual = _residual(spec, r_star, p_star)
    eq = Equilibrium(
        r_star=r_star,
        p_star=p_star,
        zeta=numpy.zeros(spec.N),
        residual=residual,
        iterations=iterations,
    )
    eq = dataclasses.replace(eq, zeta=linear_gains(spec, eq))
    log.debug(
        "solve_equilibrium: p*_0 = %.12g after %d steps, residual %.3g",
        root,
        iterations,
        residual,
    )
    return eq


def homogeneous_equilibrium(nu, R2, tol=1e-12):  # pylint: disable=invalid-name
    """
    Normalised equilibrium of a homogeneous repressive ring.

    Solves p (1 + p^nu) = R^2 for p >= 0.

    :param nu: Hill coefficient
    :param R2: squared loop ratio R^2, > 0
    :param tol: relative tolerance
    :return: p*
    """
    if not R2 > 0.0:
        raise DomainError(
            f"homogeneous_equilibrium: R^2 must be > 0, got {R2}"
        )
    return optimize.bisect(
        lambda p: p * (1.0 + p**nu) - R2,
        0.0,
        R2,
        xtol=1e-300,
        rtol=max(tol, 4.0 * numpy.finfo(float).eps),
        maxiter=MAX_BISECTION_STEPS,
    )
