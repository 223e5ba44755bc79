"""
Atomic writers: files are written to a temporary sibling and renamed
into place, so readers never see partial output.
"""

__all__ = ["sidecar_path", "write_csv", "write_json"]

import contextlib
import json
import os
import pathlib
import tempfile

from cyclosc.errors import OutputFileError

CSV_FLOAT_FORMAT = "%.17g"


@contextlib.contextmanager
def _atomic(path):
    path = pathlib.Path(path)
    try:
        handle, temporary = tempfile.mkstemp(
            dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp"
        )
    except OSError as err:
        raise OutputFileError(f"Cannot create {path}: {err}") from err
    os.close(handle)
    try:
        yield temporary
        os.replace(temporary, path)
    except OSError as err:
        raise OutputFileError(f"Cannot write {path}: {err}") from err
    finally:
        if os.path.exists(temporary):
            os.remove(temporary)


def write_json(document, path):
    """
    Write a JSON document atomically.

    :param document: JSON-serialisable object
    :param path: target file
    """
    with _atomic(path) as temporary:
        with open(temporary, "w", encoding="utf-8") as stream:
            json.dump(document, stream, indent=2, allow_nan=False)
            stream.write("\n")


def write_csv(frame, path):
    """
    Write a pandas.DataFrame as CSV atomically, floats round-trippable.

    :param frame: pandas.DataFrame
    :param path: target file
    """
    with _atomic(path) as temporary:
        frame.to_csv(temporary, index=False, float_format=CSV_FLOAT_FORMAT)


def sidecar_path(path, suffix):
    """
    Sibling file named after an output, e.g. grid.csv -> grid_ring.csv.

    :param path: output file
    :param suffix: text inserted before the new extension, may be ""
    :return: pathlib.Path with the extension of suffix or ".json"
    """
    path = pathlib.Path(path)
    stem, _, extension = suffix.partition(".")
    return path.with_name(f"{path.stem}{stem}.{extension or 'json'}")
