import os
from pathlib import Path
from typing import List, Tuple, Union

import h5py
import numpy as np

from monochrome.graphs import ConfigError, EdgeColoring, MultiGraph

PathLike = Union[str, Path]


def write_graph(g: MultiGraph, path: PathLike):
    """
    Header line ``n m``, then one ``u v`` line per edge in edge-id order.
    """
    os.makedirs(Path(path).parent, exist_ok=True)
    with open(path, "w") as file:
        file.write(f"{g.n} {g.m}\n")
        for u, v in g.edges.tolist():
            file.write(f"{u} {v}\n")


def read_graph(path: PathLike) -> MultiGraph:
    with open(path, "r") as file:
        lines = [l.split() for l in file.read().splitlines() if l.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError(f"{path}: missing `n m` header")
    n, m = (int(x) for x in lines[0])
    if len(lines) - 1 != m:
        raise ValueError(f"{path}: header announces {m} edges, found {len(lines) - 1}")
    edges = np.array([[int(u), int(v)] for u, v in lines[1:]], dtype=np.int64)
    return MultiGraph(n, edges.reshape((-1, 2)))


def write_coloring(coloring: EdgeColoring, path: PathLike):
    """One integer color per line in edge-id order."""
    os.makedirs(Path(path).parent, exist_ok=True)
    with open(path, "w") as file:
        file.write("".join(f"{c}\n" for c in coloring.colors.tolist()))


def read_coloring(path: PathLike, r: int = None) -> EdgeColoring:
    """
    :param r: Optional int. Number of colors; defaults to the largest color present.
    """
    with open(path, "r") as file:
        colors = [int(l) for l in file.read().split()]
    return EdgeColoring(colors, r or max(colors, default=1))


def write_graph_archive(samples: list, path: PathLike):
    """
    Stores many sampled graphs in one HDF5 file, one group per sample holding the edge
    array and the sample attributes (model, n, seed, model parameters).

    :param samples: List[Sample].
    """
    os.makedirs(Path(path).parent, exist_ok=True)
    with h5py.File(path, "w") as archive:
        archive.attrs["count"] = len(samples)
        for i, sample in enumerate(samples):
            group = archive.create_group(f"graph_{i}")
            group.create_dataset("edges", data=sample.graph.edges, compression="gzip")
            for key, value in sample.attributes().items():
                group.attrs[key] = value


def read_graph_archive(path: PathLike) -> List[Tuple[MultiGraph, dict]]:
    """
    :return: List[Tuple[MultiGraph, dict]]. Graphs in archive order with their attributes.
    """
    graphs = []
    with h5py.File(path, "r") as archive:
        for i in range(int(archive.attrs["count"])):
            group = archive[f"graph_{i}"]
            attributes = {
                k: (v.item() if isinstance(v, np.generic) else v)
                for k, v in group.attrs.items()
            }
            graphs.append(
                (MultiGraph(int(attributes["n"]), np.array(group["edges"])), attributes)
            )
    return graphs


def parse_flat_value(text: str):
    """
    ``true``/``false`` -> bool, ``none`` -> None, comma lists -> list, numbers -> int or
    float (``1e4`` style integers stay int), anything else -> str.
    """
    text = text.strip()
    if "," in text:
        return [parse_flat_value(part) for part in text.split(",") if part.strip()]
    lowered = text.lower()
    if lowered in ("true", "false"):
        return lowered == "true"
    if lowered in ("none", "null", ""):
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        return text
    return int(value) if value.is_integer() and "e" in lowered else value


def read_flat_config(path: PathLike) -> dict:
    """
    Reads ``key = value`` lines; ``#`` starts a comment. Keys mirror ExperimentConfig fields.
    """
    config = {}
    with open(path, "r") as file:
        for number, line in enumerate(file, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{number}: expected `key = value`, got {line!r}")
            key, value = line.split("=", 1)
            key = key.strip().replace("-", "_")
            if key in config:
                raise ConfigError(f"{path}:{number}: duplicate key {key!r}")
            config[key] = parse_flat_value(value)
    return config


def write_flat_config(config: dict, path: PathLike):
    os.makedirs(Path(path).parent, exist_ok=True)
    with open(path, "w") as file:
        for key, value in config.items():
            if isinstance(value, (list, tuple)):
                value = ", ".join(str(v) for v in value)
                if "," not in value:
                    value += ","
            file.write(f"{key} = {value}\n")
