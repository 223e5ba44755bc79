"""
Initial data on [-max delay, 0] for delayed integration.
"""

__all__ = ["HistorySpec"]

import dataclasses
import logging
from typing import Optional

import numpy
import pandas

from cyclosc.errors import DomainError

log = logging.getLogger("cyclosc-logger")

CONSTANT = "constant"
SAMPLED = "sampled"


@dataclasses.dataclass(frozen=True)
class HistorySpec:
    """
    Constant or sampled history of the interleaved state
    [r0, p0, r1, p1, ...].

    :param kind: "constant" or "sampled"
    :param values: 2N state values (constant kind)
    :param t: increasing sample times covering [-max delay, 0] (sampled)
    :param table: len(t) x 2N sampled states, interpolated linearly
    """

    kind: str
    values: Optional[numpy.ndarray] = None
    t: Optional[numpy.ndarray] = None
    table: Optional[numpy.ndarray] = None

    @classmethod
    def constant(cls, values):
        """
        History frozen at one state.

        :param values: 2N values [r0, p0, r1, p1, ...], >= 0
        :return: HistorySpec
        """
        values = numpy.asarray(values, dtype=float).ravel()
        if numpy.any(~(values >= 0.0)):
            raise DomainError("HistorySpec.constant: Values must be >= 0")
        return cls(kind=CONSTANT, values=values)

    @classmethod
    def sampled(cls, t, table):
        """
        History interpolated from samples.

        :param t: strictly increasing times ending at or after 0
        :param table: len(t) x 2N values, >= 0
        :return: HistorySpec
        """
        t = numpy.asarray(t, dtype=float)
        table = numpy.atleast_2d(numpy.asarray(table, dtype=float))
        if t.ndim != 1 or table.shape[0] != t.size or t.size < 2:
            raise DomainError(
                "HistorySpec.sampled: Need at least two samples and one "
                "table row per time"
            )
        if numpy.any(numpy.diff(t) <= 0.0):
            raise DomainError(
                "HistorySpec.sampled: Times must be strictly increasing"
            )
        if numpy.any(~(table >= 0.0)):
            raise DomainError("HistorySpec.sampled: Values must be >= 0")
        return cls(kind=SAMPLED, t=t, table=table)

    @classmethod
    def at_equilibrium(cls, eq, rel_perturbation=0.0):
        """
        Constant history at an equilibrium, optionally perturbed.

        Gene k is scaled by 1 + rel (-1)^k, so neighbouring genes move
        in opposite directions.

        :param eq: Equilibrium
        :param rel_perturbation: relative perturbation, in [0, 1)
        :return: HistorySpec
        """
        n_genes = eq.p_star.size
        factor = 1.0 + rel_perturbation * (-1.0) ** numpy.arange(n_genes)
        state = numpy.column_stack(
            [eq.r_star * factor, eq.p_star * factor]
        ).ravel()
        return cls.constant(state)

    @classmethod
    def from_csv(cls, path):
        """
        Read a sampled history with columns t, r1, p1, ..., rN, pN.

        :param path: CSV file name
        :return: HistorySpec
        """
        frame = pandas.read_csv(path)
        if "t" not in frame.columns:
            raise DomainError(f"HistorySpec.from_csv: No column t in {path}")
        columns = [name for name in frame.columns if name != "t"]
        log.debug(
            "HistorySpec.from_csv: %d samples, %d columns from %s",
            len(frame),
            len(columns),
            path,
        )
        return cls.sampled(
            frame["t"].to_numpy(dtype=float),
            frame[columns].to_numpy(dtype=float),
        )

    @property
    def width(self):
        """State size 2N"""
        if self.kind == CONSTANT:
            return self.values.size
        return self.table.shape[1]

    def check(self, n_genes, span):
        """
        Verify the history fits a network and covers the delay span.

        :param n_genes: N
        :param span: largest delay
        :return: self
        """
        if self.width != 2 * n_genes:
            raise DomainError(
                f"HistorySpec: {self.width} values given, the network needs "
                f"{2 * n_genes}"
            )
        if self.kind == SAMPLED:
            if self.t[0] > -span or self.t[-1] < 0.0:
                raise DomainError(
                    f"HistorySpec: Samples cover [{self.t[0]}, {self.t[-1]}], "
                    f"need [-{span}, 0]"
                )
        return self

    def evaluate(self, times):
        """
        History states and their time derivatives.

        :param times: array of times <= 0
        :return: (values, derivatives), each len(times) x 2N
        """
        times = numpy.asarray(times, dtype=float)
        if self.kind == CONSTANT:
            values = numpy.tile(self.values, (times.size, 1))
            return values, numpy.zeros_like(values)
        slopes = numpy.diff(self.table, axis=0) / numpy.diff(self.t)[:, None]
        segment = numpy.clip(
            numpy.searchsorted(self.t, times, side="right") - 1,
            0,
            self.t.size - 2,
        )
        values = numpy.column_stack(
            [
                numpy.interp(times, self.t, self.table[:, col])
                for col in range(self.width)
            ]
        )
        return values, slopes[segment]
