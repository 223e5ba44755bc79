"""
Parameterisation of cyclic gene regulatory networks.

Gene i (0-based) is transcribed under the control of protein i-1,
with gene 0 regulated by protein N-1, closing a single loop.
"""

__all__ = [
    "GeneSpec",
    "NetworkSpec",
    "load_spec",
    "save_spec",
    "validate",
]

import dataclasses
import json
import logging
import math

import numpy

from cyclosc.errors import (
    BadHillCoefficientError,
    DomainError,
    NegativeDelayError,
    NonPositiveRateError,
    PositiveCycleError,
)
from cyclosc.network.hill import REGULATIONS, REPRESS, regulation_sign

log = logging.getLogger("cyclosc-logger")

_RATE_FIELDS = ("a", "b", "c", "beta")
_DELAY_FIELDS = ("tau_r", "tau_p")
_GENE_KEYS = (
    "a",
    "b",
    "c",
    "beta",
    "tau_r",
    "tau_p",
    "regulation",
    "alpha0",
    "p0",
)


@dataclasses.dataclass(frozen=True)
class GeneSpec:
    """
    Kinetic data of one gene.

    :param a: mRNA degradation rate (1/time)
    :param b: protein degradation rate (1/time)
    :param c: protein synthesis rate (1/time)
    :param beta: maximal transcription rate (concentration/time)
    :param tau_r: transcription delay (time)
    :param tau_p: translation delay (time)
    :param regulation: "repress" or "activate", acting on this gene
    :param alpha0: basal transcription rate (concentration/time)
    :param p0: half-saturation scale of the incoming Hill function
    """

    a: float
    b: float
    c: float
    beta: float
    tau_r: float = 0.0
    tau_p: float = 0.0
    regulation: str = REPRESS
    alpha0: float = 0.0
    p0: float = 1.0

    @property
    def sign(self):
        """+1 for activation, -1 for repression"""
        return regulation_sign(self.regulation)

    @property
    def delay(self):
        """Transcription plus translation delay"""
        return self.tau_r + self.tau_p

    def to_dict(self):
        """JSON-ready dictionary"""
        return {key: getattr(self, key) for key in _GENE_KEYS}

    @classmethod
    def from_dict(cls, data):
        """
        Build from a dictionary with keys a, b, c, beta, tau_r, tau_p,
        regulation and optionally alpha0, p0.

        :param data: mapping
        :return: GeneSpec
        """
        missing = [
            key
            for key in ("a", "b", "c", "beta", "tau_r", "tau_p", "regulation")
            if key not in data
        ]
        if missing:
            raise DomainError(
                f"GeneSpec.from_dict: Missing keys {', '.join(missing)}"
            )
        unknown = sorted(set(data) - set(_GENE_KEYS))
        if unknown:
            raise DomainError(
                f"GeneSpec.from_dict: Unknown keys {', '.join(unknown)}"
            )
        kwargs = {
            key: float(data[key])
            for key in _GENE_KEYS
            if key in data and key != "regulation"
        }
        kwargs["regulation"] = str(data["regulation"])
        return cls(**kwargs)


@dataclasses.dataclass(frozen=True)
class NetworkSpec:
    """
    A cyclic network: genes in loop order plus the Hill coefficient.

    :param genes: tuple of GeneSpec
    :param nu: Hill coefficient shared by all regulations
    """

    genes: tuple
    nu: float

    def __post_init__(self):
        object.__setattr__(self, "genes", tuple(self.genes))
        object.__setattr__(self, "nu", float(self.nu))

    @property
    def N(self):  # pylint: disable=invalid-name
        """Number of genes"""
        return len(self.genes)

    @property
    def delta(self):
        """Product of regulation signs around the loop"""
        return math.prod(gene.sign for gene in self.genes)

    @property
    def max_delay(self):
        """Largest single delay"""
        return max(
            max(gene.tau_r for gene in self.genes),
            max(gene.tau_p for gene in self.genes),
        )

    @property
    def total_delay(self):
        """Sum of all delays around the loop"""
        return sum(gene.delay for gene in self.genes)

    def column(self, name):
        """
        Per-gene values of one field as an array.

        :param name: GeneSpec field name
        :return: numpy array of length N
        """
        return numpy.array([getattr(gene, name) for gene in self.genes])

    def replace_genes(self, **fields):
        """
        Copy with fields replaced in every gene.

        Values may be scalars (applied to all genes) or sequences of
        length N.

        :return: NetworkSpec
        """
        genes = []
        for i, gene in enumerate(self.genes):
            changes = {}
            for key, value in fields.items():
                if numpy.ndim(value) == 0:
                    changes[key] = value
                else:
                    changes[key] = value[i]
            genes.append(dataclasses.replace(gene, **changes))
        return NetworkSpec(genes=tuple(genes), nu=self.nu)

    def without_delays(self):
        """Copy with every delay set to zero"""
        return self.replace_genes(tau_r=0.0, tau_p=0.0)

    @classmethod
    def homogeneous(
        cls,
        N,
        nu,
        a,
        b,
        c,
        beta,
        tau_r=0.0,
        tau_p=0.0,
        regulation=REPRESS,
        alpha0=0.0,
        p0=1.0,
    ):  # pylint: disable=invalid-name,too-many-arguments
        """
        Network of N identical genes.

        :return: NetworkSpec
        """
        gene = GeneSpec(
            a=a,
            b=b,
            c=c,
            beta=beta,
            tau_r=tau_r,
            tau_p=tau_p,
            regulation=regulation,
            alpha0=alpha0,
            p0=p0,
        )
        return cls(genes=(gene,) * N, nu=nu)

    def to_dict(self):
        """JSON-ready dictionary"""
        return {
            "nu": self.nu,
            "genes": [gene.to_dict() for gene in self.genes],
        }

    @classmethod
    def from_dict(cls, data):
        """
        Build from a dictionary with keys "nu" and "genes".

        :param data: mapping
        :return: NetworkSpec
        """
        if not isinstance(data, dict) or "nu" not in data:
            raise DomainError("NetworkSpec.from_dict: Missing key nu")
        genes = data.get("genes")
        if not isinstance(genes, list):
            raise DomainError(
                "NetworkSpec.from_dict: Key genes must be a list"
            )
        return cls(
            genes=tuple(GeneSpec.from_dict(gene) for gene in genes),
            nu=float(data["nu"]),
        )

    def to_json(self, indent=2):
        """JSON text"""
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text):
        """Parse JSON text"""
        return cls.from_dict(json.loads(text))


def validate(spec):
    """
    Check all parameter invariants of a network.

    Rates must be strictly positive and finite, delays non-negative,
    p0 > 0, alpha0 >= 0, nu >= 1, and the loop sign must be negative.

    :param spec: NetworkSpec
    :return: the same spec
    """
    if spec.N < 1:
        raise DomainError("validate: Network needs at least one gene")
    if not spec.nu >= 1.0 or not math.isfinite(spec.nu):
        raise BadHillCoefficientError(
            f"validate: Hill coefficient must be >= 1, got {spec.nu}"
        )

    for i, gene in enumerate(spec.genes):
        for name in _RATE_FIELDS:
            value = getattr(gene, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise NonPositiveRateError(
                    f"validate: Gene {i} has {name} = {value}, "
                    "rates must be positive and finite",
                    gene=i,
                )
        for name in _DELAY_FIELDS:
            value = getattr(gene, name)
            if not (value >= 0.0 and math.isfinite(value)):
                raise NegativeDelayError(
                    f"validate: Gene {i} has {name} = {value}, "
                    "delays must be non-negative and finite",
                    gene=i,
                )
        if not (gene.p0 > 0.0 and math.isfinite(gene.p0)):
            raise BadHillCoefficientError(
                f"validate: Gene {i} has p0 = {gene.p0}, must be > 0",
                gene=i,
            )
        if not (gene.alpha0 >= 0.0 and math.isfinite(gene.alpha0)):
            raise BadHillCoefficientError(
                f"validate: Gene {i} has alpha0 = {gene.alpha0}, "
                "must be >= 0",
                gene=i,
            )
        if gene.regulation not in REGULATIONS:
            raise DomainError(
                f"validate: Gene {i} has unknown regulation "
                f"{gene.regulation!r}",
                gene=i,
            )

    if spec.delta != -1:
        activators = [
            i for i, gene in enumerate(spec.genes) if gene.sign > 0
        ]
        raise PositiveCycleError(
            "validate: Loop sign is +1, an odd number of repressions is "
            f"required (activating genes: {activators})",
            gene=activators[0] if activators else None,
        )

    return spec


def load_spec(path):
    """
    Read and validate a network from a JSON file.

    :param path: file name
    :return: NetworkSpec
    """
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    spec = validate(NetworkSpec.from_dict(data))
    log.debug("load_spec: Read %d-gene network from %s", spec.N, path)
    return spec


def save_spec(spec, path):
    """
    Write a network to a JSON file.

    :param spec: NetworkSpec
    :param path: file name
    """
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(spec.to_json())
        handle.write("\n")
