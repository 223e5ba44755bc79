"""
RegionGrid data model: verdicts over a two-parameter grid.
"""

__all__ = ["RegionGrid", "RegionGridAccessor"]

import json

import numpy
import pandas
import xarray


class RegionGrid(xarray.Dataset):
    """
    Container for a parameter sweep.

    Variables outcome, L, L_bar and margin have dimensions (y, x); the
    coordinates hold the axis values. Traced boundary points, if any,
    live along the dimension "point". Attributes carry the axis
    descriptions and the template network as JSON.
    """

    __slots__ = ()

    def __init__(self, data_vars=None, coords=None, attrs=None):
        super().__init__(data_vars, coords=coords, attrs=attrs)

    @classmethod
    def constructor(
        cls, x_axis, y_axis, outcome, gain, critical, margin, template_json
    ):  # pylint: disable=too-many-arguments
        """
        Create a RegionGrid.

        :param x_axis: AxisSpec of the columns
        :param y_axis: AxisSpec of the rows
        :param outcome: ny x nx verdict strings
        :param gain: ny x nx average gains L
        :param critical: ny x nx critical gains L_bar
        :param margin: ny x nx margins
        :param template_json: JSON of the template network
        :return: RegionGrid
        """
        dims = ("y", "x")
        coords = {"x": x_axis.values(), "y": y_axis.values()}
        data_vars = {
            "outcome": (dims, numpy.asarray(outcome, dtype=object)),
            "L": (dims, numpy.asarray(gain, dtype=float)),
            "L_bar": (dims, numpy.asarray(critical, dtype=float)),
            "margin": (dims, numpy.asarray(margin, dtype=float)),
            "boundary_segment": (("point",), numpy.zeros(0, dtype=int)),
            "boundary_x": (("point",), numpy.zeros(0)),
            "boundary_y": (("point",), numpy.zeros(0)),
        }
        attrs = {
            "data_model": "RegionGrid",
            "x_axis": json.dumps(x_axis.to_dict()),
            "y_axis": json.dumps(y_axis.to_dict()),
            "template": template_json,
        }
        return cls(data_vars, coords=coords, attrs=attrs)


@xarray.register_dataset_accessor("region_acc")
class RegionGridAccessor:
    """
    RegionGrid property accessor
    """

    def __init__(self, xarray_obj):
        self._obj = xarray_obj

    @property
    def shape(self):
        """(ny, nx)"""
        return self._obj.sizes["y"], self._obj.sizes["x"]

    @property
    def x_axis(self):
        """Column axis description as a dictionary"""
        return json.loads(self._obj.attrs["x_axis"])

    @property
    def y_axis(self):
        """Row axis description as a dictionary"""
        return json.loads(self._obj.attrs["y_axis"])

    def count(self, outcome):
        """Number of cells with a given outcome"""
        return int(numpy.sum(self._obj["outcome"].values == outcome))

    def set_boundary(self, segment, x_points, y_points):
        """
        Replace the stored boundary points.

        :param segment: segment id per point
        :param x_points: x coordinates
        :param y_points: y coordinates
        """
        names = ("boundary_segment", "boundary_x", "boundary_y")
        for name in names:
            if name in self._obj:
                del self._obj[name]
        values = (
            numpy.asarray(segment, dtype=int),
            numpy.asarray(x_points, dtype=float),
            numpy.asarray(y_points, dtype=float),
        )
        for name, value in zip(names, values):
            self._obj[name] = (("point",), value)

    def to_dataframe(self):
        """
        Cell table with columns x, y, outcome, L, L_bar, margin, rows
        ordered y-major.

        :return: pandas.DataFrame
        """
        x_grid, y_grid = numpy.meshgrid(
            self._obj["x"].values, self._obj["y"].values
        )
        return pandas.DataFrame(
            {
                "x": x_grid.ravel(),
                "y": y_grid.ravel(),
                "outcome": self._obj["outcome"].values.ravel(),
                "L": self._obj["L"].values.ravel(),
                "L_bar": self._obj["L_bar"].values.ravel(),
                "margin": self._obj["margin"].values.ravel(),
            }
        )

    def boundary_dataframe(self):
        """
        Boundary table with columns segment, x, y.

        :return: pandas.DataFrame
        """
        return pandas.DataFrame(
            {
                "segment": self._obj["boundary_segment"].values,
                "x": self._obj["boundary_x"].values,
                "y": self._obj["boundary_y"].values,
            }
        )
