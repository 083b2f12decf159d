"""Monte Carlo threshold location for the F-free down-set.

mu_p is the probability a G(n, p) sample is F-free.  Its estimator here
reuses one battery of coupled edge-mark tables for every probed p, which
makes the empirical curve exactly non-increasing in p; bisection on that
curve cannot flip-flop.  Fresh seeds across repeats quantify sampling error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .density import m_density
from .graphs import PatternGraph
from .sampling import EdgeThresholdTable, Seed, coupled_realize, sample_gnp
from .subiso import contains_copy


def wilson_interval(successes: int, trials: int, z: float = 1.96) -> tuple[float, float]:
    """Wilson 95% score interval for a binomial proportion."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    phat = successes / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class MuEstimate:
    mu_hat: float
    ci_lo: float
    ci_hi: float
    trials: int


def estimate_mu(n: int, p: float, f: PatternGraph, trials: int, seed: Seed) -> MuEstimate:
    """Fraction of G(n, p) samples that are F-free, with Wilson interval."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    free = sum(
        1 for i in range(trials)
        if not contains_copy(sample_gnp(n, p, seed, purpose="mu", index=i), f)
    )
    lo, hi = wilson_interval(free, trials)
    return MuEstimate(free / trials, lo, hi, trials)


@dataclass(frozen=True)
class ThresholdEstimate:
    n: int
    pattern: str
    p_hat: float
    mu: MuEstimate
    trials: int
    seed_master: int
    tolerance: float
    trace: tuple[tuple[float, float], ...]  # (p, mu_hat) probes, probe order

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern,
            "p_hat": self.p_hat,
            "mu_at_p_hat": self.mu.mu_hat,
            "ci_lo": self.mu.ci_lo,
            "ci_hi": self.mu.ci_hi,
            "trials": self.trials,
            "seed": self.seed_master,
            "tolerance": self.tolerance,
            "trace": [[p, mu] for p, mu in self.trace],
        }


class BracketError(RuntimeError):
    """Initial bracket endpoints fail to straddle mu = 1/2."""


def estimate_pc(n: int, f: PatternGraph, trials: int, tolerance: float,
                seed: Seed) -> ThresholdEstimate:
    """Bisection for the p with mu_p = 1/2 on a shared coupled battery."""
    if n < f.vertex_count:
        raise ValueError(f"n={n} < pattern vertex count {f.vertex_count}: mu is constant 1")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    battery = [EdgeThresholdTable.generate(n, seed.stream(f"pc-table-n{n}", i))
               for i in range(trials)]

    def mu_hat(p: float) -> float:
        free = sum(1 for t in battery if not contains_copy(coupled_realize(t, p), f))
        return free / trials

    lo, hi = n ** -2.0, 1.0 - n ** -2.0
    trace = [(lo, mu_hat(lo)), (hi, mu_hat(hi))]
    if trace[0][1] < 0.5 or trace[1][1] > 0.5:
        raise BracketError(f"endpoints do not straddle 1/2: {trace}")
    while hi - lo > tolerance * 0.5 * (hi + lo):
        mid = 0.5 * (lo + hi)
        mu_mid = mu_hat(mid)
        trace.append((mid, mu_mid))
        if mu_mid >= 0.5:
            lo = mid
        else:
            hi = mid
    p_hat = 0.5 * (lo + hi)
    free = sum(1 for t in battery if not contains_copy(coupled_realize(t, p_hat), f))
    ci_lo, ci_hi = wilson_interval(free, trials)
    return ThresholdEstimate(n, f.to_text(), p_hat,
                             MuEstimate(free / trials, ci_lo, ci_hi, trials),
                             trials, seed.master, tolerance, tuple(trace))


@dataclass(frozen=True)
class ScalingFit:
    pattern: str
    points: tuple[tuple[int, float], ...]
    slope: float
    intercept: float
    target_slope: float

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "points": [[n, p] for n, p in self.points],
            "slope": self.slope,
            "intercept": self.intercept,
            "target_slope": self.target_slope,
        }


def scaling_fit(f: PatternGraph, n_list: list[int], trials: int,
                tolerance: float, seed: Seed) -> ScalingFit:
    """Least-squares slope of log p_hat against log n; target is -1/m(F)."""
    if len(n_list) < 3 or sorted(n_list) != list(n_list) or len(set(n_list)) != len(n_list):
        raise ValueError("need at least 3 strictly increasing n values")
    points = [(n, estimate_pc(n, f, trials, tolerance, seed).p_hat) for n in n_list]
    slope, intercept = np.polyfit(np.log([n for n, _ in points]),
                                  np.log([p for _, p in points]), 1)
    return ScalingFit(f.to_text(), tuple(points), float(slope), float(intercept),
                      -1.0 / float(m_density(f)))
