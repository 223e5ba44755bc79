"""
Trajectory data model: mRNA and protein levels on a uniform time grid.
"""

__all__ = [
    "CONVERGED",
    "OSCILLATING",
    "UNDETERMINED",
    "Trajectory",
    "TrajectoryAccessor",
]

import numpy
import pandas
import xarray

OSCILLATING = "Oscillating"
CONVERGED = "Converged"
UNDETERMINED = "Undetermined"


class Trajectory(xarray.Dataset):
    """
    Container for a simulated trajectory.

    Variables r and p have dimensions (time, gene). Attributes carry
    the step dt, the characteristic timescale of the network, and the
    classification with its period and amplitude estimates.
    """

    __slots__ = ()

    def __init__(self, data_vars=None, coords=None, attrs=None):
        super().__init__(data_vars, coords=coords, attrs=attrs)

    @classmethod
    def constructor(
        cls, time, r_levels, p_levels, dt, timescale, spec_json=""
    ):  # pylint: disable=too-many-arguments
        """
        Create a Trajectory.

        :param time: uniform time grid
        :param r_levels: len(time) x N mRNA levels
        :param p_levels: len(time) x N protein levels
        :param dt: step
        :param timescale: max(T_r, T_p, tau) of the network
        :param spec_json: JSON of the simulated network
        :return: Trajectory
        """
        n_genes = numpy.shape(r_levels)[1]
        coords = {
            "time": numpy.asarray(time),
            "gene": numpy.arange(1, n_genes + 1),
        }
        data_vars = {
            "r": (("time", "gene"), numpy.asarray(r_levels)),
            "p": (("time", "gene"), numpy.asarray(p_levels)),
        }
        attrs = {
            "data_model": "Trajectory",
            "dt": float(dt),
            "timescale": float(timescale),
            "classification": UNDETERMINED,
            "period": numpy.nan,
            "amplitude": numpy.nan,
            "spec": spec_json,
        }
        return cls(data_vars, coords=coords, attrs=attrs)


@xarray.register_dataset_accessor("trajectory_acc")
class TrajectoryAccessor:
    """
    Trajectory property accessor
    """

    def __init__(self, xarray_obj):
        self._obj = xarray_obj

    @property
    def ngenes(self):
        """Number of genes"""
        return self._obj.sizes["gene"]

    @property
    def classification(self):
        """Oscillating, Converged or Undetermined"""
        return self._obj.attrs["classification"]

    @property
    def duration(self):
        """Covered time span"""
        time = self._obj["time"].values
        return float(time[-1] - time[0])

    def state(self):
        """Interleaved states [r1, p1, r2, p2, ...], one row per step"""
        r_levels = self._obj["r"].values
        p_levels = self._obj["p"].values
        return numpy.stack([r_levels, p_levels], axis=2).reshape(
            r_levels.shape[0], -1
        )

    def to_dataframe(self, stride=1):
        """
        Table with columns t, r1, p1, ..., rN, pN.

        :param stride: keep every stride-th row
        :return: pandas.DataFrame
        """
        columns = {"t": self._obj["time"].values[::stride]}
        r_levels = self._obj["r"].values[::stride]
        p_levels = self._obj["p"].values[::stride]
        for k in range(self.ngenes):
            columns[f"r{k + 1}"] = r_levels[:, k]
            columns[f"p{k + 1}"] = p_levels[:, k]
        return pandas.DataFrame(columns)

    def to_csv(self, path, stride=1):
        """
        Write the table of to_dataframe to a CSV file.

        :param path: target file
        :param stride: keep every stride-th row
        """
        self.to_dataframe(stride).to_csv(
            path, index=False, float_format="%.17g"
        )
