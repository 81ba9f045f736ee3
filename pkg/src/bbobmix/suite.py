"""Suite containers and canonical JSON serialization.

A suite file stores the generation parameters plus one record per
problem (weights, instances, optimum location, scale factors). The
serialization is canonical: floats use the shortest round-trip decimal
form and keys are emitted in a fixed order, so load followed by save
reproduces the file byte for byte.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass

import numpy as np

from .affine import (
    DOMAIN_HIGH,
    DOMAIN_LOW,
    N_COMPONENTS,
    ManyAffineProblem,
    sample_instance,
)

FORMAT_VERSION = "1"


@dataclass(frozen=True)
class ProblemRecord:
    """Serializable definition of one generated problem."""

    problem_id: int
    weights: np.ndarray
    instances: np.ndarray
    x_opt: np.ndarray
    scale_factors: np.ndarray

    def to_problem(self, dim: int) -> ManyAffineProblem:
        return ManyAffineProblem(self.weights, self.instances, self.x_opt, dim, self.scale_factors)


@dataclass(frozen=True)
class SuiteDefinition:
    version: str
    master_seed: int
    dim: int
    threshold: float
    instance_range: int
    problems: list[ProblemRecord]


def generate_suite(
    count: int,
    dim: int,
    master_seed: int,
    threshold: float = 0.85,
    instance_range: int = 100,
    scale_factors=None,
) -> SuiteDefinition:
    """Sample `count` problems from one seeded stream."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if scale_factors is None:
        from .calibration import DEFAULT_SCALE_FACTORS
        scale_factors = DEFAULT_SCALE_FACTORS
    scale_factors = np.asarray(scale_factors, dtype=float)
    rng = np.random.default_rng(master_seed)
    records = []
    for pid in range(count):
        weights, instances, x_opt = sample_instance(rng, dim, threshold, instance_range)
        records.append(ProblemRecord(pid, weights, instances, x_opt, scale_factors.copy()))
    return SuiteDefinition(FORMAT_VERSION, master_seed, dim, threshold, instance_range, records)


def _floats(arr) -> list[float]:
    return [float(v) for v in arr]


def suite_to_json(suite: SuiteDefinition) -> str:
    """Canonical text form: fixed key order, repr-shortest floats."""
    doc = {
        "version": suite.version,
        "master_seed": suite.master_seed,
        "dim": suite.dim,
        "threshold": suite.threshold,
        "instance_range": suite.instance_range,
        "problems": [
            {
                "problem_id": rec.problem_id,
                "weights": _floats(rec.weights),
                "instances": [int(v) for v in rec.instances],
                "x_opt": _floats(rec.x_opt),
                "scale_factors": _floats(rec.scale_factors),
            }
            for rec in suite.problems
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def suite_from_json(text: str) -> SuiteDefinition:
    doc = json.loads(text)
    dim = int(doc["dim"])
    records = []
    for entry in doc["problems"]:
        rec = ProblemRecord(
            int(entry["problem_id"]),
            np.asarray(entry["weights"], dtype=float),
            np.asarray(entry["instances"], dtype=int),
            np.asarray(entry["x_opt"], dtype=float),
            np.asarray(entry["scale_factors"], dtype=float),
        )
        # constructing the problem checks every record invariant
        rec.to_problem(dim)
        records.append(rec)
    return SuiteDefinition(
        str(doc["version"]),
        int(doc["master_seed"]),
        dim,
        float(doc["threshold"]),
        int(doc["instance_range"]),
        records,
    )


def atomic_write_text(path: str, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_suite(suite: SuiteDefinition, path: str) -> None:
    atomic_write_text(path, suite_to_json(suite))


def load_suite(path: str) -> SuiteDefinition:
    with open(path) as fh:
        return suite_from_json(fh.read())


def scale_table_to_json(values, provenance: str, comparison=None) -> str:
    """Scale-table file: the 24 factors plus an optional per-function
    comparison against the built-in defaults."""
    doc = {
        "version": FORMAT_VERSION,
        "provenance": provenance,
        "scale_factors": _floats(values),
    }
    if comparison is not None:
        doc["comparison"] = comparison
    return json.dumps(doc, indent=2) + "\n"
