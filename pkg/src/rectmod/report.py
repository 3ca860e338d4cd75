"""Grid specifications and per-claim check reports."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Literal

import numpy as np

GridLaw = Literal["uniform", "endpoint_refined", "logarithmic"]


@dataclass(frozen=True)
class GridSpec:
    """Sample points on [lo, hi].

    ``endpoint_refined`` puts a quarter of the points uniformly within
    (hi - lo)/100 of each endpoint and the remaining half uniformly between.
    """

    lo: float
    hi: float
    n: int
    law: GridLaw = "uniform"

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"grid needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.n < 2:
            raise ValueError(f"grid needs n >= 2, got {self.n}")
        if self.law not in ("uniform", "endpoint_refined", "logarithmic"):
            raise ValueError(f"unknown grid law {self.law!r}")
        if self.law == "logarithmic" and self.lo <= 0:
            raise ValueError("logarithmic grid needs lo > 0")

    def points(self) -> np.ndarray:
        lo, hi, n = self.lo, self.hi, self.n
        if self.law == "uniform":
            return np.linspace(lo, hi, n)
        if self.law == "logarithmic":
            pts = np.logspace(math.log10(lo), math.log10(hi), n)
            pts[0], pts[-1] = lo, hi
            return pts
        if n < 8:
            return np.linspace(lo, hi, n)
        w = (hi - lo) / 100.0
        q = n // 4
        mid = n - 2 * q
        left = np.linspace(lo, lo + w, q, endpoint=False)
        right = np.linspace(hi - w, hi, q + 1)[1:]
        middle = np.linspace(lo + w, hi - w, mid)
        return np.concatenate([left, middle, right])


@dataclass
class CheckReport:
    """Verdict for one claim.

    ``worst_margin`` is the claim's least favourable number: the largest
    residual for identities, the smallest slack for inequalities and
    orderings, the largest distance from the limit for endpoint claims.
    """

    claim_id: str
    verdict: Literal["pass", "fail"]
    worst_margin: float
    worst_point: float | tuple[float, float] | None
    points_tested: int
    detail: str = field(default="")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> str:
        d = asdict(self)
        if isinstance(d["worst_point"], tuple):
            d["worst_point"] = list(d["worst_point"])
        return json.dumps(d, allow_nan=True)

    @classmethod
    def from_json(cls, line: str) -> "CheckReport":
        d = json.loads(line)
        if isinstance(d.get("worst_point"), list):
            d["worst_point"] = tuple(d["worst_point"])
        return cls(**d)


def to_jsonl(reports: list[CheckReport]) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


def from_jsonl(text: str) -> list[CheckReport]:
    return [CheckReport.from_json(line) for line in text.splitlines() if line.strip()]
