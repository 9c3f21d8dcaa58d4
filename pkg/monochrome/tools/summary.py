"""
Module containing the experiment summary: per-(model, r, n) medians and a least-squares fit
of log(median max monochromatic component) against log n. Everything here is recomputed
from RunRecords alone.
"""
from collections import OrderedDict
from typing import Dict, List, Tuple

import numpy as np
from sklearn.linear_model import LinearRegression

from .records import RunRecord


def _median(values) -> float:
    values = [v for v in values if v is not None]
    return float(np.median(values)) if values else None


def _rate(values) -> float:
    values = [v for v in values if v is not None]
    return float(np.mean(values)) if values else None


def fit_exponent(ns, values) -> Tuple[float, float, float]:
    """
    :param ns: vertex counts.
    :param values: positive measurements at each n.
    :return: (slope, intercept, r^2) of log(values) ~ log(ns); slope is the empirical
        scaling exponent.
    """
    x = np.log(np.asarray(ns, dtype=np.float64)).reshape((-1, 1))
    y = np.log(np.asarray(values, dtype=np.float64))
    model = LinearRegression().fit(x, y)
    return float(model.coef_[0]), float(model.intercept_), float(model.score(x, y))


class Summary(object):
    def __init__(self, rows: List[dict], fits: Dict[Tuple[str, int], dict]):
        self.rows = rows
        self.fits = fits

    def exponent(self, model: str, r: int) -> float:
        return self.fits[(model, r)]["exponent"]

    def table(self) -> List[dict]:
        """Rows keyed by (model, r, n) with the fitted exponent of their (model, r) group."""
        table = []
        for row in self.rows:
            fit = self.fits.get((row["model"], row["r"]), {})
            table.append(
                dict(row, exponent=fit.get("exponent"), exponent_r2=fit.get("r2"))
            )
        return table

    def as_dict(self) -> dict:
        return {
            "rows": self.table(),
            "fits": [
                dict(model=model, r=r, **fit) for (model, r), fit in self.fits.items()
            ],
        }


def summarize(records: List[RunRecord]) -> Summary:
    groups = OrderedDict()
    for record in sorted(
        records, key=lambda rec: (rec.model, rec.r, rec.n, rec.strategy or "", rec.trial)
    ):
        groups.setdefault((record.model, record.r, record.n), []).append(record)
    rows = []
    for (model, r, n), group in groups.items():
        rows.append(
            OrderedDict(
                model=model,
                r=r,
                n=n,
                trials=len(group),
                median_max_component=_median(rec.max_component for rec in group),
                median_max_fraction=_median(rec.max_fraction for rec in group),
                median_estar_size=_median(rec.estar_size for rec in group),
                estar_ok_rate=_rate(rec.estar_ok for rec in group),
                path_ok_rate=_rate(rec.path_ok for rec in group),
                median_cycle_length=_median(rec.cycle_length for rec in group),
                cycle_ok_rate=_rate(rec.cycle_ok for rec in group),
            )
        )
    fits = OrderedDict()
    for model, r in OrderedDict.fromkeys((row["model"], row["r"]) for row in rows):
        points = [
            (row["n"], row["median_max_component"])
            for row in rows
            if row["model"] == model
            and row["r"] == r
            and row["median_max_component"] is not None
        ]
        if len(points) < 2:
            continue
        slope, intercept, r2 = fit_exponent(*zip(*points))
        fits[(model, r)] = {"exponent": slope, "intercept": intercept, "r2": r2}
    return Summary(rows, fits)
