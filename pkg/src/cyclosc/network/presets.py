"""
Published network parameterisations used as worked examples.
"""

__all__ = [
    "HES7_R_WILD",
    "PRESETS",
    "half_life_to_rate",
    "list_presets",
    "load_preset",
]

import math

from cyclosc.errors import UnknownPresetError
from cyclosc.network.network_model import GeneSpec, NetworkSpec, validate

# Loop ratio R of the wild-type Hes7 oscillator; p0 is chosen to match it
HES7_R_WILD = 21.5


def half_life_to_rate(half_life):
    """
    Degradation rate for a given half-life, log(2)/t.

    :param half_life: half-life (time)
    :return: rate (1/time)
    """
    return math.log(2.0) / half_life


def _example7(delays=True):
    high_c = (0, 2, 5, 6)
    long_delay = (0, 2, 3, 6)
    genes = []
    for i in range(7):
        if delays:
            tau_r = 0.31 if i in long_delay else 0.26
            tau_p = 0.21 if i in long_delay else 0.26
        else:
            tau_r = tau_p = 0.0
        genes.append(
            GeneSpec(
                a=1.2,
                b=4.8,
                c=1.92 if i in high_c else 3.84,
                beta=4.32 if i in high_c else 2.16,
                tau_r=tau_r,
                tau_p=tau_p,
            )
        )
    return NetworkSpec(genes=tuple(genes), nu=2.6)


def _counterexample():
    return NetworkSpec.homogeneous(
        3, 2.0, a=1.0, b=1.0, c=1.7498, beta=1.7498, tau_r=0.5, tau_p=0.5
    )


def _repressilator():
    # r' = -r + alpha/(1+p^nu) + alpha0, p' = -gamma (p - r)
    gamma = 0.2
    return NetworkSpec.homogeneous(
        3, 2.0, a=1.0, b=gamma, c=gamma, beta=624.0, alpha0=0.0866
    )


def _hes7(t_p):
    t_r = 3.0
    c = 4.5
    beta = 33.0
    a = half_life_to_rate(t_r)
    b_wild = half_life_to_rate(20.0)
    p0 = c * beta / (a * b_wild * HES7_R_WILD**2)
    gene = GeneSpec(
        a=a,
        b=half_life_to_rate(t_p),
        c=c,
        beta=beta,
        tau_r=7.0,
        tau_p=30.0,
        p0=p0,
    )
    return NetworkSpec(genes=(gene,), nu=2.0)


PRESETS = {
    "example7": (
        lambda: _example7(True),
        "Seven-gene repressive ring with heterogeneous delays (tau = 0.52)",
    ),
    "example7_nodelay": (
        lambda: _example7(False),
        "Seven-gene repressive ring without delays",
    ),
    "counterexample": (
        _counterexample,
        "Three-gene ring that is unstable although the spiral test says "
        "stable",
    ),
    "repressilator": (
        _repressilator,
        "Three-gene Repressilator with leaky promoters, no delay",
    ),
    "hes7_wild": (
        lambda: _hes7(20.0),
        "Hes7 self-repression, wild type (protein half-life 20 min)",
    ),
    "hes7_mutant": (
        lambda: _hes7(30.0),
        "Hes7 self-repression, mutant (protein half-life 30 min)",
    ),
}


def list_presets():
    """
    Names and descriptions of all presets.

    :return: list of (name, description) tuples, sorted by name
    """
    return sorted((name, entry[1]) for name, entry in PRESETS.items())


def load_preset(name):
    """
    Build a preset network.

    :param name: preset name, see list_presets
    :return: validated NetworkSpec
    """
    try:
        builder = PRESETS[name][0]
    except KeyError as err:
        raise UnknownPresetError(
            f"load_preset: Preset {name!r} not known, "
            f"choose from {', '.join(sorted(PRESETS))}"
        ) from err
    return validate(builder())
