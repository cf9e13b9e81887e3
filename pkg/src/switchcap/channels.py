"""Quantum channels in Kraus form.

Provides the generalized-Pauli (Heisenberg-Weyl) unitary basis, the
depolarizing family built on it, and serial/parallel composition. Kraus
lists are kept exactly as constructed; representations are never minimized
or canonicalized, so representation-independence stays testable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qmat import DensityMatrix, DimensionMismatchError, tensor

TOL_CPTP = 1e-9


@dataclass(frozen=True)
class KrausChannel:
    """A CPTP map given by a finite list of Kraus operators.

    Each operator is ``dim_out x dim_in``. Completeness (sum K'K = I) is the
    caller's responsibility; ``is_cptp`` checks it.
    """

    dim_in: int
    dim_out: int
    kraus_ops: tuple[np.ndarray, ...]

    def __post_init__(self):
        if not self.kraus_ops:
            raise ValueError("a channel needs at least one Kraus operator")
        ops = tuple(np.asarray(k, dtype=complex) for k in self.kraus_ops)
        for k in ops:
            if k.shape != (self.dim_out, self.dim_in):
                raise DimensionMismatchError(
                    f"Kraus operator shape {k.shape}, expected "
                    f"({self.dim_out}, {self.dim_in})"
                )
        object.__setattr__(self, "kraus_ops", ops)

    def stacked(self) -> np.ndarray:
        """All Kraus operators as one (n, dim_out, dim_in) array."""
        return np.stack(self.kraus_ops)


@dataclass(frozen=True)
class CptpCheck:
    ok: bool
    max_deviation: float

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class WeylBasis:
    """The d^2 unitaries X(i) Z(j), indexed by i*d + j; element 0 is I."""

    dim: int
    unitaries: tuple[np.ndarray, ...]


def weyl_basis(d: int) -> WeylBasis:
    """Generalized Pauli basis: X(i)|l> = |i+l mod d>, Z(j)|l> = w^{jl}|l>."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    omega = np.exp(2j * np.pi / d)
    shifts = [np.roll(np.eye(d, dtype=complex), i, axis=0) for i in range(d)]
    phases = [np.diag(omega ** (j * np.arange(d))) for j in range(d)]
    return WeylBasis(d, tuple(shifts[i] @ phases[j] for i in range(d) for j in range(d)))


def identity_channel(d: int) -> KrausChannel:
    return KrausChannel(d, d, (np.eye(d, dtype=complex),))


def depolarizing_channel(d: int, q: float) -> KrausChannel:
    """rho -> q rho + (1-q) I/d, in the redundant (d^2 + 1)-operator form.

    The Kraus list is sqrt(q) I followed by sqrt(1-q)/d times each of the
    d^2 Weyl unitaries (identity included). The redundancy keeps the index
    structure of the double sum over operator pairs intact.
    """
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must lie in [0, 1], got {q}")
    basis = weyl_basis(d)
    ops = [np.sqrt(q) * np.eye(d, dtype=complex)]
    ops.extend(np.sqrt(1.0 - q) / d * u for u in basis.unitaries)
    return KrausChannel(d, d, tuple(ops))


def dephasing_channel(d: int) -> KrausChannel:
    """Full dephasing in the computational basis; all Kraus operators commute."""
    projectors = tuple(
        np.outer(np.eye(d, dtype=complex)[k], np.eye(d)[k]) for k in range(d)
    )
    return KrausChannel(d, d, projectors)


def apply(ch: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """sum_i K_i rho K_i'."""
    if rho.dim != ch.dim_in:
        raise DimensionMismatchError(
            f"state dimension {rho.dim} != channel input {ch.dim_in}"
        )
    k = ch.stacked()
    out = np.einsum("nij,jk,nlk->il", k, rho.matrix, k.conj())
    return DensityMatrix(out)


def is_cptp(ch: KrausChannel, tol: float = TOL_CPTP) -> CptpCheck:
    """Check completeness: max-norm deviation of sum K'K from the identity."""
    k = ch.stacked()
    total = np.einsum("nji,njk->ik", k.conj(), k)
    dev = float(np.abs(total - np.eye(ch.dim_in)).max())
    return CptpCheck(dev <= tol, dev)


def compose_serial(first: KrausChannel, second: KrausChannel) -> KrausChannel:
    """second after first; Kraus set is all products K2 K1."""
    if second.dim_in != first.dim_out:
        raise DimensionMismatchError(
            f"serial mismatch: {first.dim_out} -> {second.dim_in}"
        )
    ops = tuple(k2 @ k1 for k2 in second.kraus_ops for k1 in first.kraus_ops)
    return KrausChannel(first.dim_in, second.dim_out, ops)


def compose_parallel(a: KrausChannel, b: KrausChannel) -> KrausChannel:
    """Side-by-side action; Kraus set is all tensors Ka x Kb."""
    ops = tuple(tensor(ka, kb) for ka in a.kraus_ops for kb in b.kraus_ops)
    return KrausChannel(a.dim_in * b.dim_in, a.dim_out * b.dim_out, ops)
