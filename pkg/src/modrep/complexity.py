"""Complexity of simple two-part modules: the max of rank-variety dimensions
over maximal elementary abelian classes, with the dimension shortcut, and
verification suites against the predicted values.

The computation path never consults the predictions: the closed-form tables
produce the predicted value, the geometry produces the computed one, and a
verdict records the comparison.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, asdict

from .partitions import Partition, is_p_regular
from .specht import gram_and_simple
from .subgroups import maximal_elab_classes
from .twopart import NOT_COVERED, PredictedComplexity, predicted_complexity, simple_dim
from .variety import VarietyReport, variety_dimension

GUARD_N = {2: 12, 3: 12, 5: 10}


class ResultCache:
    """Append-only JSONL cache of integer-valued results keyed by (op, args)."""

    def __init__(self, path: str):
        self.path = path
        self._data: dict[str, int] = {}
        if os.path.exists(path):
            with open(path) as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        rec = json.loads(line)
                        self._data[rec["key"]] = rec["value"]

    @staticmethod
    def _key(op: str, args: tuple) -> str:
        return json.dumps([op, list(args)], separators=(",", ":"))

    def get(self, op: str, args: tuple) -> int | None:
        return self._data.get(self._key(op, args))

    def put(self, op: str, args: tuple, value: int) -> None:
        key = self._key(op, args)
        if self._data.get(key) == value:
            return
        self._data[key] = value
        with open(self.path, "a") as fh:
            fh.write(json.dumps({"key": key, "value": int(value)}) + "\n")


@dataclass
class ComplexityReport:
    module: str
    n: int
    second: int
    p: int
    weight: int
    dim: int
    computed: int
    predicted: PredictedComplexity
    verdict: str  # match | mismatch | not_covered | shortcut_used
    shortcut: bool
    per_class: list[VarietyReport]
    seed: int
    from_cache: bool = False

    def to_json(self) -> dict:
        out = asdict(self)
        out["predicted"] = {"value": self.predicted.value, "rule": self.predicted.rule,
                            "weight": self.predicted.weight}
        out["per_class"] = [asdict(r) for r in self.per_class]
        for r in out["per_class"]:
            r["moduli"] = {k: list(v) for k, v in r["moduli"].items()}
        return out


def complexity(n: int, second: int, p: int, *, extensions: tuple[int, ...] | None = None,
               seed: int = 0, no_shortcut: bool = False,
               cache: ResultCache | None = None) -> ComplexityReport:
    """Complexity of the simple module (n - second, second) over F_p.

    Shortcuts to the p-weight when p does not divide the module dimension
    (the block-theoretic upper bound is attained); otherwise restricts the
    explicitly built module to one representative per maximal elementary
    abelian class and takes the max of the variety dimensions.
    """
    lam = Partition(tuple(x for x in (n - second, second) if x > 0))
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam} is not {p}-regular")
    if p not in GUARD_N or n > GUARD_N[p]:
        raise ValueError(f"complexity guard: n={n} out of range for p={p}")
    predicted = predicted_complexity(n, second, p)
    w = predicted.weight
    dim = simple_dim(n, second, p)
    module_id = f"D:{lam}"
    shortcut = dim % p != 0 and not no_shortcut
    per_class: list[VarietyReport] = []
    from_cache = False
    if shortcut:
        computed = w
    else:
        cache_args = (n, second, p, sorted(extensions) if extensions else None)
        hit = cache.get("complexity", cache_args) if cache else None
        if hit is not None:
            computed = hit
            from_cache = True
        else:
            _, D = gram_and_simple(lam, [], p)
            for group in maximal_elab_classes(n, p):
                per_class.append(variety_dimension(D, group, extensions=extensions,
                                                   seed=seed, module_id=module_id))
            computed = max(r.dim_estimate for r in per_class)
            if cache:
                cache.put("complexity", cache_args, computed)
    if computed > w:
        raise AssertionError(f"computed complexity {computed} exceeds weight {w} for {module_id}")
    if predicted.value == NOT_COVERED:
        verdict = "shortcut_used" if shortcut else "not_covered"
    else:
        verdict = "match" if computed == predicted.value else "mismatch"
    return ComplexityReport(module_id, n, second, p, w, dim, computed, predicted,
                            verdict, shortcut, per_class, seed, from_cache)


def theorem_a_instances(p: int, n_max: int, n_min: int = 4):
    for n in range(n_min, n_max + 1):
        for second in (1, 2):
            if 2 * second > n:
                continue
            lam = Partition(tuple(x for x in (n - second, second) if x > 0))
            if is_p_regular(lam, p):
                yield n, second


def theorem_c_instances(p: int, n_max: int, n_min: int = 4,
                        seconds: tuple[int, ...] | None = None):
    if p == 2:
        raise ValueError("the two-part weight theorem covers odd p only")
    covered = set(range(0, 2 * p)) | ({2 * p} if p > 3 else set())
    for n in range(n_min, n_max + 1):
        for second in sorted(covered if seconds is None else set(seconds)):
            if second == 0 or 2 * second > n:
                continue
            yield n, second


def verify_suite(suite: str, p: int, n_max: int, *, n_min: int = 4,
                 seconds: tuple[int, ...] | None = None,
                 extensions: tuple[int, ...] | None = None, seed: int = 0,
                 no_shortcut: bool = False,
                 cache: ResultCache | None = None) -> list[ComplexityReport]:
    """Run every covered instance of a theorem suite and compare verdicts."""
    if suite == "theorem-a":
        instances = theorem_a_instances(p, n_max, n_min)
    elif suite == "theorem-c":
        instances = theorem_c_instances(p, n_max, n_min, seconds)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    reports = []
    for n, second in instances:
        if seconds is not None and second not in seconds:
            continue
        reports.append(complexity(n, second, p, extensions=extensions, seed=seed,
                                  no_shortcut=no_shortcut, cache=cache))
    return reports
