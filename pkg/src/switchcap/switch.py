"""The quantum SWITCH of two channels with a qubit control.

Ordering convention, used everywhere: the joint space is target (x) control,
with the target as the slower-varying index. Control value |0> means channel
1 acts first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import KrausChannel, depolarizing_channel
from .qmat import DensityMatrix, DimensionMismatchError, tensor

_P0 = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
_P1 = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)


@dataclass(frozen=True)
class ControlState:
    """Qubit control with weight ``p`` on |0>.

    Coherent means the pure state sqrt(p)|0> + sqrt(1-p)|1>; otherwise the
    dephased mixture p|0><0| + (1-p)|1><1|.
    """

    p: float
    coherent: bool = True

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")

    def density(self) -> np.ndarray:
        rho = np.array([[self.p, 0.0], [0.0, 1.0 - self.p]], dtype=complex)
        if self.coherent:
            c = np.sqrt(self.p * (1.0 - self.p))
            rho[0, 1] = rho[1, 0] = c
        return rho


@dataclass(frozen=True)
class JointState:
    """State on the 2d-dimensional target (x) control space."""

    d: int
    state: DensityMatrix

    def __post_init__(self):
        if self.state.dim != 2 * self.d:
            raise DimensionMismatchError(
                f"joint dimension {self.state.dim} != 2 * {self.d}"
            )


@dataclass(frozen=True)
class MeasurementOutcome:
    probability: float
    unnormalized: np.ndarray
    state: DensityMatrix


def switch_channel(n1: KrausChannel, n2: KrausChannel) -> KrausChannel:
    """Kraus operators K2_i K1_j (x) |0><0| + K1_j K2_i (x) |1><1|."""
    if not (n1.dim_in == n1.dim_out == n2.dim_in == n2.dim_out):
        raise DimensionMismatchError("both channels must be square and equal-dimension")
    d = n1.dim_in
    ops = tuple(
        tensor(k2 @ k1, _P0) + tensor(k1 @ k2, _P1)
        for k2 in n2.kraus_ops
        for k1 in n1.kraus_ops
    )
    return KrausChannel(2 * d, 2 * d, ops)


def switch_with_fixed_control(
    n1: KrausChannel, n2: KrausChannel, ctrl: ControlState
) -> KrausChannel:
    """The d -> 2d channel rho -> S(n1, n2)(rho (x) rho_c) with rho_c fixed.

    For a coherent control the Kraus operators are W (I (x) |psi_c>); for a
    dephased one, each basis component contributes its own family with
    weight sqrt of its probability.
    """
    sw = switch_channel(n1, n2)
    d = n1.dim_in
    eye = np.eye(d, dtype=complex)
    if ctrl.coherent:
        vecs = [np.array([np.sqrt(ctrl.p), np.sqrt(1.0 - ctrl.p)], dtype=complex)]
    else:
        vecs = []
        if ctrl.p > 0:
            vecs.append(np.array([np.sqrt(ctrl.p), 0.0], dtype=complex))
        if ctrl.p < 1:
            vecs.append(np.array([0.0, np.sqrt(1.0 - ctrl.p)], dtype=complex))
    embeds = [tensor(eye, v.reshape(2, 1)) for v in vecs]
    ops = tuple(w @ e for w in sw.kraus_ops for e in embeds)
    return KrausChannel(d, 2 * d, ops)


def switch_apply(
    n1: KrausChannel, n2: KrausChannel, rho: DensityMatrix, ctrl: ControlState
) -> JointState:
    """Sum over all Kraus pairs applied to rho (x) rho_c."""
    d = n1.dim_in
    if rho.dim != d:
        raise DimensionMismatchError(f"state dimension {rho.dim} != channel {d}")
    sw = switch_channel(n1, n2)
    sigma = tensor(rho.matrix, ctrl.density())
    k = sw.stacked()
    out = np.einsum("nij,jk,nlk->il", k, sigma, k.conj())
    return JointState(d, DensityMatrix(out))


def switched_depolarizing_analytic(
    d: int, q: float, ctrl: ControlState, rho: DensityMatrix
) -> JointState:
    """Closed-form SWITCH output for two noise-q depolarizing channels.

    (1-q)^2 [ I/d (x) diag(p, 1-p) + sqrt(p(1-p)) rho/d^2 (x) offdiag ]
      + 2q(1-q) I/d (x) rho_c + q^2 rho (x) rho_c,
    written here in the target (x) control ordering.
    """
    if not ctrl.coherent:
        raise ValueError("the closed form assumes a coherent control")
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must lie in [0, 1], got {q}")
    if rho.dim != d:
        raise DimensionMismatchError(f"state dimension {rho.dim} != {d}")
    p = ctrl.p
    coh = np.sqrt(p * (1.0 - p))
    eye = np.eye(d, dtype=complex)
    diag_c = np.array([[p, 0.0], [0.0, 1.0 - p]], dtype=complex)
    off_c = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    rho_c = ctrl.density()
    out = (1.0 - q) ** 2 * (
        tensor(eye / d, diag_c) + coh * tensor(rho.matrix / d**2, off_c)
    )
    out += 2.0 * q * (1.0 - q) * tensor(eye / d, rho_c)
    out += q**2 * tensor(rho.matrix, rho_c)
    return JointState(d, DensityMatrix(out))


def switched_depolarizing(d: int, q: float) -> KrausChannel:
    """The 2d-dimensional SWITCH of two identical noise-q depolarizing channels."""
    dep = depolarizing_channel(d, q)
    return switch_channel(dep, dep)


def fourier_measure_control(js: JointState):
    """Measure the control in {|+>, |->}; returns the two outcomes.

    Each outcome carries the unnormalized conditional operator <x|.|x> on
    the target, its probability (trace), and the normalized state.
    """
    d = js.d
    outcomes = []
    for sign in (+1.0, -1.0):
        v = np.array([1.0, sign], dtype=complex) / np.sqrt(2.0)
        proj = tensor(np.eye(d, dtype=complex), v.reshape(1, 2))
        cond = proj @ js.state.matrix @ proj.conj().T
        prob = float(cond.trace().real)
        if prob > 1e-14:
            normalized = DensityMatrix(cond / prob)
        else:
            # zero-probability branch: conditional state is conventionally
            # the maximally mixed one
            normalized = DensityMatrix(np.eye(d, dtype=complex) / d)
        outcomes.append(MeasurementOutcome(prob, cond, normalized))
    return outcomes
