"""Statistics harness for the irreducibility tests on random polynomials.

Random model (the literature's exact sampling scheme is underspecified, so
deviations in the success counts are attributable to this choice): sample
the support as a uniform random subset of the degree-n triangle with the
prescribed cardinality, resampling until an exact degree-n term is present,
then draw coefficients uniformly from the nonzero integers of [-bound,
bound].  Sparsity: prop=1 targets about n(n+1)/4 nonzero terms, prop=2
about n(n+1)/6.  Reports are deterministic given the seed (timings aside).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from ..irrtest import newton_polytope_mod, test_direct
from ..numfield import bi_irreducible_q
from ..poly import BiPoly
from ..rings import ZZ


@dataclass
class BenchConfig:
    degree: int
    count: int
    prop: int = 1
    bound: int = 10 ** 12
    seed: int = 0
    dense: bool = False
    filter_rational: bool = False

    def __post_init__(self):
        if self.prop not in (1, 2):
            raise ValueError("prop must be 1 or 2")
        if self.degree < 1 or self.count < 0 or self.bound < 1:
            raise ValueError("bad bench parameters")


@dataclass
class BenchReport:
    config: BenchConfig
    success: int = 0
    attempted: int = 0
    filtered_attempted: int | None = None
    filtered_success: int | None = None
    avg_time_s: float = 0.0

    def counts(self) -> dict:
        """The deterministic part of the report (bit-identical across runs
        with equal seeds)."""
        out = {
            "n": self.config.degree,
            "prop": self.config.prop,
            "count": self.attempted,
            "success": self.success,
            "dense": self.config.dense,
            "seed": self.config.seed,
        }
        if self.filtered_attempted is not None:
            out["filtered_count"] = self.filtered_attempted
            out["filtered_success"] = self.filtered_success
        return out

    def to_json(self) -> str:
        out = self.counts()
        out["avg_time_s"] = self.avg_time_s
        return json.dumps(out)

    def text_table(self) -> str:
        head = f"{'n':>5} {'Prop':>5} {'Success':>8} {'Count':>6} {'T_av':>10}"
        row = (
            f"{self.config.degree:>5} {self.config.prop:>5} "
            f"{self.success:>8} {self.attempted:>6} {self.avg_time_s:>10.5f}"
        )
        lines = [head, row]
        if self.filtered_attempted is not None:
            lines.append(
                f"rationally irreducible subset: {self.filtered_success}"
                f"/{self.filtered_attempted}"
            )
        return "\n".join(lines)


def _item_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * 1_000_003 + index)


def random_bench_poly(cfg: BenchConfig, index: int) -> BiPoly:
    """The index-th sample polynomial of a bench run (deterministic)."""
    n = cfg.degree
    rng = _item_rng(cfg.seed, index)
    triangle = [(i, j) for i in range(n + 1) for j in range(n + 1 - i)]
    if cfg.dense:
        support = list(triangle)
    else:
        total = n * (n + 1)
        k = max(1, round(total / 4) if cfg.prop == 1 else round(total / 6))
        k = min(k, len(triangle))
        while True:
            support = rng.sample(triangle, k)
            if any(i + j == n for i, j in support):
                break
    terms = {}
    for key in sorted(support):
        c = 0
        while c == 0:
            c = rng.randint(-cfg.bound, cfg.bound)
        terms[key] = c
    return BiPoly.from_int_terms(terms, ZZ)


def run_bench(cfg: BenchConfig) -> BenchReport:
    """Generate cfg.count polynomials and count how many the polytope test
    certifies (the modular variant when dense)."""
    report = BenchReport(cfg)
    if cfg.count == 0:
        return report
    total_t = 0.0
    for idx in range(cfg.count):
        f = random_bench_poly(cfg, idx)
        t0 = time.perf_counter()
        if cfg.dense:
            ans = newton_polytope_mod(f)
        else:
            ans = test_direct(f)
        total_t += time.perf_counter() - t0
        report.attempted += 1
        if ans.certified:
            report.success += 1
        if cfg.filter_rational:
            if report.filtered_attempted is None:
                report.filtered_attempted = 0
                report.filtered_success = 0
            if bi_irreducible_q(f):
                report.filtered_attempted += 1
                if ans.certified:
                    report.filtered_success += 1
    report.avg_time_s = total_t / cfg.count
    return report
