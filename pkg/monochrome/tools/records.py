"""
Module containing the per-trial RunRecord and the serialized sinks records are written
through: one JSON object per line, plus a summary table keyed by (model, r, n).
"""
import csv
import json
import os
from pathlib import Path
from typing import Iterable, List, Union

import numpy as np

FIELDS = (
    # identity
    "kind",
    "model",
    "r",
    "n",
    "trial",
    "seed",
    "strategy",
    "strategy_used",
    # monochromatic components
    "max_components",
    "component_counts",
    "max_component",
    "max_fraction",
    # constructive colorings
    "block_count",
    "max_block_size",
    "estar_size",
    "estar_limit",
    "estar_ok",
    "stripped_arcs",
    "peeled_arcs",
    "peel_iterations",
    "max_in_degree",
    "max_arborescence_order",
    "path_max_lengths",
    "path_limit",
    "path_ok",
    "class_max_height",
    "class_max_order",
    "unicyclic_count",
    # long cycle probe
    "majority_color",
    "majority_edges",
    "majority_floor",
    "density_c",
    "density_smax",
    "density_worst_ratio",
    "density_passed",
    "density_sets",
    "hypothesis_holds",
    "cycle_floor",
    "cycle_length",
    "cycle_ok",
    "wall_time",
)


def to_plain(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    return value


class RunRecord(object):
    def __init__(self, **fields):
        """
        One Monte Carlo trial. Every name in `FIELDS` is present in the serialized form;
        fields a trial does not measure are null, which marks them as skipped.
        """
        unknown = set(fields) - set(FIELDS)
        if unknown:
            raise ValueError(f"unknown RunRecord fields: {sorted(unknown)}")
        self.fields = {name: to_plain(fields.get(name)) for name in FIELDS}

    def __getattr__(self, name):
        fields = self.__dict__.get("fields", {})
        if name in fields:
            return fields[name]
        raise AttributeError(name)

    def update(self, **fields):
        unknown = set(fields) - set(FIELDS)
        if unknown:
            raise ValueError(f"unknown RunRecord fields: {sorted(unknown)}")
        self.fields.update({k: to_plain(v) for k, v in fields.items()})

    def to_dict(self) -> dict:
        return dict(self.fields)

    def to_json(self) -> str:
        return json.dumps(self.fields, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "RunRecord":
        return cls(**json.loads(line))

    def __eq__(self, other):
        if not isinstance(other, RunRecord):
            return NotImplemented
        return self.fields == other.fields

    def __repr__(self):
        return (
            f"RunRecord(model={self.model}, r={self.r}, n={self.n}, trial={self.trial})"
        )


class RecordSink(object):
    def __init__(self, path: Union[str, Path]):
        """
        Serialized writer for RunRecords. Every record is flushed as soon as it is written,
        so an interrupted run leaves a parseable prefix.

        :param path: str or Path. JSON lines file, overwritten.
        """
        self.path = Path(path)
        self._file = None
        self.count = 0

    def __enter__(self):
        os.makedirs(self.path.parent, exist_ok=True)
        self._file = open(self.path, "w")
        return self

    def __exit__(self, *exc):
        self.close()

    def write(self, record: RunRecord):
        self._file.write(record.to_json() + "\n")
        self._file.flush()
        self.count += 1

    def close(self):
        if self._file is not None:
            self._file.close()
            self._file = None


def read_records(path: Union[str, Path]) -> List[RunRecord]:
    """Reads a JSON lines record file, ignoring a truncated last line."""
    records = []
    with open(path, "r") as file:
        for line in file:
            line = line.strip()
            if not line:
                continue
            try:
                records.append(RunRecord.from_json(line))
            except json.JSONDecodeError:
                break
    return records


def write_table(rows: Iterable[dict], path: Union[str, Path], fmt: str = "csv"):
    """
    :param rows: dicts sharing the same keys.
    :param path: output path.
    :param fmt: str. 'csv' or 'json'.
    """
    rows = [{k: to_plain(v) for k, v in row.items()} for row in rows]
    os.makedirs(Path(path).parent, exist_ok=True)
    if fmt == "json":
        with open(path, "w") as file:
            json.dump(rows, file, sort_keys=True, indent=2)
            file.write("\n")
    elif fmt == "csv":
        columns = list(rows[0]) if rows else []
        with open(path, "w", newline="") as file:
            writer = csv.DictWriter(file, fieldnames=columns)
            writer.writeheader()
            writer.writerows(rows)
    else:
        raise ValueError(
            f"arg `fmt` had value: {fmt} which is not supported. Only ['csv', 'json'] are supported."
        )
