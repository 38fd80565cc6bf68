"""Ordered spectra with labels, degeneracy tags and serialization.

A :class:`Spectrum` is the common output of every solver in this package: an
ascending list of eigenvalues, each carrying an optional basis label, a
degeneracy tag and provenance metadata (method name, basis/grid sizes).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field, asdict
from typing import Optional

import numpy as np

CSV_HEADER = ["level_index", "label", "eigenvalue", "degeneracy", "method", "N", "N_int"]


@dataclass
class Level:
    index: int
    eigenvalue: float
    label: str = ""
    degeneracy: int = 1
    coefficients: Optional[np.ndarray] = None

    def row(self, method, n, n_int):
        return [self.index, self.label, format(self.eigenvalue, ".17g"),
                self.degeneracy, method, n, n_int]


@dataclass
class Spectrum:
    levels: list[Level]
    method: str = ""
    n: int = 0
    n_int: int = 0
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def __getitem__(self, i):
        return self.levels[i]

    @property
    def eigenvalues(self):
        return np.array([lv.eigenvalue for lv in self.levels])

    @property
    def labels(self):
        return [lv.label for lv in self.levels]

    def rescaled(self, scale_sq):
        """Divide every eigenvalue by ``scale_sq`` (labels preserved)."""
        if scale_sq <= 0:
            raise ValueError("scale_sq must be positive")
        levels = [Level(lv.index, lv.eigenvalue / scale_sq, lv.label,
                        lv.degeneracy, lv.coefficients) for lv in self.levels]
        return Spectrum(levels, self.method, self.n, self.n_int, dict(self.meta))

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for lv in self.levels:
            w.writerow(lv.row(self.method, self.n, self.n_int))
        return buf.getvalue()

    def to_json(self):
        payload = {
            "method": self.method, "N": self.n, "N_int": self.n_int,
            "meta": self.meta,
            "levels": [{"level_index": lv.index, "label": lv.label,
                        "eigenvalue": lv.eigenvalue, "degeneracy": lv.degeneracy}
                       for lv in self.levels],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def tag_degeneracies(values, rel_gap=1e-7):
    """Group nearly equal eigenvalues and return per-level multiplicities.

    Two consecutive values belong to one group when their relative gap is
    below ``rel_gap``.
    """
    values = np.asarray(values, dtype=float)
    tags = np.ones(len(values), dtype=int)
    start = 0
    for i in range(1, len(values) + 1):
        last = values[i - 1] if i <= len(values) else None
        if i == len(values) or abs(values[i] - values[i - 1]) > rel_gap * max(1.0, abs(values[i])):
            tags[start:i] = i - start
            start = i
    return tags


def build_spectrum(values, method, n=0, n_int=0, labels=None, vectors=None,
                   rel_gap=1e-7, meta=None):
    values = np.asarray(values, dtype=float)
    order = np.argsort(values, kind="stable")
    values = values[order]
    tags = tag_degeneracies(values, rel_gap)
    levels = []
    for i, v in enumerate(values):
        j = order[i]
        lab = labels[j] if labels is not None else ""
        vec = None if vectors is None else np.asarray(vectors)[:, j]
        levels.append(Level(i, float(v), str(lab), int(tags[i]), vec))
    return Spectrum(levels, method, n, n_int, meta or {})
