"""Holevo information of the switched depolarizing channel.

Two independent routes to the same number: the analytic formula
chi = log2(d) + H(control marginal) - H_min, built from the block-matrix
spectrum of the closed-form output, and a numerical ensemble optimizer
that searches input ensembles directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .channels import KrausChannel
from .qmat import (
    DensityMatrix,
    DimensionMismatchError,
    Spectrum,
    TOL_TRACE,
    entropy_bits,
)
from .switch import ControlState


@dataclass(frozen=True)
class Ensemble:
    """Classical-quantum input: (probability, state) pairs of equal dimension."""

    entries: tuple[tuple[float, DensityMatrix], ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("ensemble must be nonempty")
        probs = [p for p, _ in self.entries]
        if min(probs) < 0:
            raise ValueError("probabilities must be nonnegative")
        if abs(sum(probs) - 1.0) > TOL_TRACE:
            raise ValueError(f"probabilities sum to {sum(probs)}, expected 1")
        dims = {rho.dim for _, rho in self.entries}
        if len(dims) > 1:
            raise DimensionMismatchError(f"mixed state dimensions {dims}")

    @property
    def dim(self) -> int:
        return self.entries[0][1].dim


class AnalyticCapacity(NamedTuple):
    chi: float
    entropy_control: float
    h_min: float


@dataclass(frozen=True)
class OptimizerResult:
    ensemble: Ensemble
    chi: float
    trials_run: int
    refine_steps: int
    best_source: str  # "orthonormal", "random", or "refined"


@dataclass(frozen=True)
class CapacityReport:
    """One sweep row: analytic and numeric capacity at (d, q, p)."""

    d: int
    q: float
    p: float
    chi_analytic: float | None
    chi_numeric: float
    entropy_control: float | None
    h_min: float | None
    optimizer_trials: int
    optimizer_refine_steps: int
    best_source: str


def reduced_control_state(d: int, q: float, ctrl: ControlState) -> DensityMatrix:
    """2x2 control marginal of the switched depolarizing output.

    (1-q)^2 [ diag(p, 1-p) + sqrt(p(1-p))/d^2 offdiag ] + q(2-q) rho_c.
    """
    if not ctrl.coherent:
        raise ValueError("defined for a coherent control")
    p = ctrl.p
    coh = np.sqrt(p * (1.0 - p))
    m = (1.0 - q) ** 2 * np.array(
        [[p, coh / d**2], [coh / d**2, 1.0 - p]], dtype=complex
    )
    m += q * (2.0 - q) * ctrl.density()
    return DensityMatrix(m)


def control_entropy(d: int, q: float, ctrl: ControlState) -> float:
    """H of the control marginal, in bits, for any coherent control weight."""
    rc = reduced_control_state(d, q, ctrl)
    return entropy_bits(np.linalg.eigvalsh(rc.matrix))


def block_symmetric_spectrum(a, b) -> Spectrum:
    """Spectrum of [[A, B], [B, A]]: the union of spec(A+B) and spec(A-B)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"block shapes differ: {a.shape} vs {b.shape}")
    plus = np.linalg.eigvalsh(a + b)
    minus = np.linalg.eigvalsh(a - b)
    return Spectrum(tuple(np.concatenate([plus, minus])))


def switched_spectrum(d: int, q: float, rho_spectrum: Spectrum) -> Spectrum:
    """Eigenvalues of the joint output at balanced coherent control.

    For each input eigenvalue lam:
      lam_plus  = ((1-q)^2 + 4q(1-q)) / 2d + (q^2 + (1-q)^2 / 2d^2) lam
      lam_minus = (1-q)^2 (d - lam) / 2d^2
    """
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must lie in [0, 1], got {q}")
    lam = np.asarray(rho_spectrum.eigenvalues, dtype=float)
    if len(lam) != d:
        raise DimensionMismatchError(f"expected {d} eigenvalues, got {len(lam)}")
    r = 1.0 - q
    plus = (r**2 + 4.0 * q * r) / (2.0 * d) + (q**2 + r**2 / (2.0 * d**2)) * lam
    minus = r**2 * (d - lam) / (2.0 * d**2)
    return Spectrum(tuple(np.concatenate([plus, minus])))


def h_min(d: int, q: float) -> float:
    """Minimum output entropy (bits); attained on pure target inputs."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    pure = Spectrum((1.0,) + (0.0,) * (d - 1))
    return entropy_bits(switched_spectrum(d, q, pure).eigenvalues)


def holevo_analytic(d: int, q: float) -> AnalyticCapacity:
    """chi = log2(d) + H(control marginal) - H_min, at balanced coherent control."""
    ctrl = ControlState(0.5, coherent=True)
    hc = entropy_bits(
        np.linalg.eigvalsh(reduced_control_state(d, q, ctrl).matrix)
    )
    hm = h_min(d, q)
    return AnalyticCapacity(np.log2(d) + hc - hm, hc, hm)


def holevo_of_ensemble(ch: KrausChannel, ens: Ensemble) -> float:
    """Mutual information H(sum_x p_x N(rho_x)) - sum_x p_x H(N(rho_x))."""
    if ens.dim != ch.dim_in:
        raise DimensionMismatchError(
            f"ensemble dimension {ens.dim} != channel input {ch.dim_in}"
        )
    k = ch.stacked()
    avg = np.zeros((ch.dim_out, ch.dim_out), dtype=complex)
    cond = 0.0
    for prob, rho in ens.entries:
        if prob == 0.0:
            continue
        out = np.einsum("nij,jk,nlk->il", k, rho.matrix, k.conj())
        avg += prob * out
        cond += prob * entropy_bits(np.linalg.eigvalsh(out))
    return entropy_bits(np.linalg.eigvalsh(avg)) - cond


def orthonormal_ensemble(d: int) -> Ensemble:
    """d computational-basis pure states with uniform probabilities."""
    eye = np.eye(d, dtype=complex)
    return Ensemble(
        tuple((1.0 / d, DensityMatrix(np.outer(eye[i], eye[i]))) for i in range(d))
    )


def _pure_state(vec: np.ndarray) -> DensityMatrix:
    v = vec / np.linalg.norm(vec)
    return DensityMatrix(np.outer(v, v.conj()))


def _random_pure_vec(rng: np.random.Generator, d: int) -> np.ndarray:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def _assemble(probs: np.ndarray, vecs: list[np.ndarray]) -> Ensemble:
    probs = np.clip(probs, 0.0, None)
    probs = probs / probs.sum()
    return Ensemble(tuple((float(p), _pure_state(v)) for p, v in zip(probs, vecs)))


def _transfer_matrix(ch: KrausChannel) -> np.ndarray:
    """Row-major superoperator: vec(N(rho)) = T vec(rho).

    Internal optimizer speedup only; applying T once replaces the sum over
    the (possibly large, redundant) Kraus list.
    """
    return sum(np.kron(k, k.conj()) for k in ch.kraus_ops)


def _chi_pure(transfer: np.ndarray, dim_out: int, probs, vecs) -> float:
    """Holevo quantity of a pure-state ensemble via the transfer matrix."""
    probs = np.clip(np.asarray(probs, dtype=float), 0.0, None)
    probs = probs / probs.sum()
    avg = np.zeros((dim_out, dim_out), dtype=complex)
    cond = 0.0
    for p, v in zip(probs, vecs):
        if p == 0.0:
            continue
        v = v / np.linalg.norm(v)
        out = (transfer @ np.outer(v, v.conj()).reshape(-1)).reshape(dim_out, dim_out)
        avg += p * out
        cond += p * entropy_bits(np.linalg.eigvalsh(out))
    return entropy_bits(np.linalg.eigvalsh(avg)) - cond


def optimize_ensemble(
    ch: KrausChannel, d: int, trials: int = 200, seed: int = 0
) -> OptimizerResult:
    """Multi-start random search over pure-state ensembles, then hill-climbing.

    Candidates: the canonical uniform orthonormal ensemble, ``trials``
    random ensembles of up to d^2 pure states, and a coordinate-perturbation
    refinement of the best with shrinking steps until improvement < 1e-10.
    Deterministic in ``seed``; each trial draws from its own (seed, trial)
    stream.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if ch.dim_in != d:
        raise DimensionMismatchError(f"channel input {ch.dim_in} != {d}")

    transfer = _transfer_matrix(ch)
    best_probs = np.full(d, 1.0 / d)
    best_vecs = [np.eye(d, dtype=complex)[i] for i in range(d)]
    best_chi = _chi_pure(transfer, ch.dim_out, best_probs, best_vecs)
    source = "orthonormal"

    for t in range(trials):
        rng = np.random.default_rng((seed, t))
        m = int(rng.integers(2, d * d + 1))
        vecs = [_random_pure_vec(rng, d) for _ in range(m)]
        probs = rng.dirichlet(np.ones(m))
        chi = _chi_pure(transfer, ch.dim_out, probs, vecs)
        if chi > best_chi:
            best_chi, best_probs, best_vecs = chi, probs, vecs
            source = "random"

    refine_steps = 0
    step = 0.1
    while step > 1e-6:
        for _pass in range(40):
            start = best_chi
            for si in range(len(best_vecs)):
                for ci in range(d):
                    for delta in (step, -step, 1j * step, -1j * step):
                        cand = [v.copy() for v in best_vecs]
                        cand[si][ci] += delta
                        chi = _chi_pure(transfer, ch.dim_out, best_probs, cand)
                        refine_steps += 1
                        if chi > best_chi:
                            best_chi, best_vecs = chi, cand
                            source = "refined"
            for si in range(len(best_probs)):
                for delta in (step, -step):
                    cand = np.asarray(best_probs, dtype=float).copy()
                    cand[si] = max(cand[si] + delta, 0.0)
                    if cand.sum() <= 0:
                        continue
                    chi = _chi_pure(transfer, ch.dim_out, cand, best_vecs)
                    refine_steps += 1
                    if chi > best_chi:
                        best_chi, best_probs = chi, cand / cand.sum()
                        source = "refined"
            if best_chi - start < 1e-10:
                break
        step /= 4.0

    return OptimizerResult(
        _assemble(np.asarray(best_probs), best_vecs),
        best_chi,
        trials,
        refine_steps,
        source,
    )
