"""Suspiciousness metrics over the four basic statistics.

Implements Tarantula, Ochiai, DStar (configurable exponent, default 2) and
Wong2 with an explicit division-by-zero policy so that no valid input ever
produces NaN:

* Tarantula: inner ratios with a zero denominator count as 0; a zero outer
  denominator yields 0.
* Ochiai: 0 whenever ef is 0 (which covers the zero radicand).
* DStar: ef**star / (ep + nf); +infinity when ef > 0 and the denominator is
  0, and 0 when both are 0.
* Wong2: ef - ep, always finite.

An element never covered by a failing test therefore scores the minimum
under every ratio metric.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .errors import UnknownMetricError
from .model import SpectrumCounts


class MetricName(str, Enum):
    TARANTULA = "tarantula"
    OCHIAI = "ochiai"
    DSTAR = "dstar"
    WONG2 = "wong2"


@dataclass(frozen=True)
class MetricId:
    """A metric selection: the formula plus, for DStar, its exponent."""

    name: MetricName
    star: int = 2  # DStar exponent; ignored by the other metrics

    def __post_init__(self) -> None:
        if self.star < 1:
            raise UnknownMetricError(f"DStar exponent must be >= 1, got {self.star}")

    @property
    def label(self) -> str:
        """Canonical CLI/report spelling, e.g. "tarantula" or "dstar3"."""
        if self.name is MetricName.DSTAR and self.star != 2:
            return f"dstar{self.star}"
        return self.name.value


TARANTULA = MetricId(MetricName.TARANTULA)
OCHIAI = MetricId(MetricName.OCHIAI)
DSTAR2 = MetricId(MetricName.DSTAR)
WONG2 = MetricId(MetricName.WONG2)

#: Default selection, in report order.
DEFAULT_METRICS: tuple[MetricId, ...] = (TARANTULA, OCHIAI, DSTAR2, WONG2)


@dataclass(frozen=True)
class Score:
    """A suspiciousness value; finite except for DStar's +infinity."""

    value: float
    metric: MetricId


def tarantula(counts: SpectrumCounts) -> Score:
    """Failure rate share: (ef/F) / (ef/F + ep/P), in [0, 1]."""
    fail_ratio = counts.ef / counts.total_failed if counts.total_failed else 0.0
    pass_ratio = counts.ep / counts.total_passed if counts.total_passed else 0.0
    denominator = fail_ratio + pass_ratio
    value = fail_ratio / denominator if denominator else 0.0
    return Score(value, TARANTULA)


def ochiai(counts: SpectrumCounts) -> Score:
    """ef / sqrt((ef+nf) * (ef+ep)), in [0, 1]."""
    if counts.ef == 0:
        return Score(0.0, OCHIAI)
    value = counts.ef / math.sqrt(counts.total_failed * (counts.ef + counts.ep))
    return Score(value, OCHIAI)


def dstar(counts: SpectrumCounts, star: int = 2) -> Score:
    """ef**star / (ep + nf); +infinity beats every finite score."""
    metric = MetricId(MetricName.DSTAR, star)
    denominator = counts.ep + counts.nf
    if denominator == 0:
        return Score(math.inf if counts.ef > 0 else 0.0, metric)
    return Score(counts.ef**star / denominator, metric)


def wong2(counts: SpectrumCounts) -> Score:
    """ef - ep, in [-P, F]."""
    return Score(float(counts.ef - counts.ep), WONG2)


def score(metric: MetricId, counts: SpectrumCounts) -> Score:
    """Evaluate one metric on one element's counts."""
    if metric.name is MetricName.TARANTULA:
        return tarantula(counts)
    if metric.name is MetricName.OCHIAI:
        return ochiai(counts)
    if metric.name is MetricName.DSTAR:
        return dstar(counts, metric.star)
    if metric.name is MetricName.WONG2:
        return wong2(counts)
    raise UnknownMetricError(f"unknown metric {metric.name!r}")


def score_all(
    counts: Mapping[str, SpectrumCounts], metrics: Iterable[MetricId]
) -> dict[str, dict[MetricId, Score]]:
    """Score every element under every selected metric.

    Deterministic: result ordering follows `counts` and `metrics` order.
    """
    metrics = tuple(metrics)
    if not metrics:
        raise ValueError("at least one metric is required")
    return {
        element_id: {metric: score(metric, c) for metric in metrics}
        for element_id, c in counts.items()
    }


_METRIC_RE = re.compile(r"^(?P<name>[a-z]+?)(?P<star>\d+)?$")


def parse_metric(text: str) -> MetricId:
    """Parse a CLI metric name, case-insensitively.

    Accepts "tarantula", "ochiai", "wong2", and "dstar" with an optional
    exponent suffix ("dstar3").
    """
    cleaned = text.strip().lower()
    match = _METRIC_RE.match(cleaned)
    if match is None:
        raise UnknownMetricError(f"unknown metric {text!r}")
    name, suffix = match.group("name"), match.group("star")
    if cleaned == MetricName.WONG2.value:
        return WONG2
    if name == MetricName.DSTAR.value:
        if suffix is None:
            return DSTAR2
        star = int(suffix)
        if star < 1:
            raise UnknownMetricError(f"DStar exponent must be >= 1, got {text!r}")
        return MetricId(MetricName.DSTAR, star)
    if suffix is None and name in (MetricName.TARANTULA.value, MetricName.OCHIAI.value):
        return MetricId(MetricName(name))
    raise UnknownMetricError(f"unknown metric {text!r}")


def round_significant(value: float, digits: int = 12) -> float:
    """Round to `digits` significant digits; 0 and infinities pass through.

    Used to form reproducible tie groups before ranking.
    """
    if value == 0 or not math.isfinite(value):
        return value
    return round(value, digits - 1 - math.floor(math.log10(abs(value))))
