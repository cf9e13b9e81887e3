"""Independent brute-force verification layer.

The brute-force path below rebuilds everything from raw operator sums: its
own Weyl unitaries, its own Kraus list, and an explicit double loop over
all (d^2 + 1)^2 operator pairs. It deliberately shares nothing with the
channel/switch modules beyond the qmat primitives, so agreement between
the two paths is meaningful.

Reference constants for the capacity formulas are evaluated here in
extended precision (mpmath) and frozen into the test fixtures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict

import mpmath as mp
import numpy as np

from . import capacity, switch
from .channels import depolarizing_channel
from .qmat import DensityMatrix, hermitian_spectrum, partial_trace, tensor
from .switch import ControlState

SUITES = (
    "analytic-vs-brute",
    "spectrum-vs-eigensolver",
    "chi-vs-optimizer",
    "marginals",
    "cptp",
)


@dataclass(frozen=True)
class ComparisonReport:
    description: str
    max_abs_deviation: float
    instances_tested: int
    worst_case_parameters: dict

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    def __str__(self):
        worst = ", ".join(f"{k}={v}" for k, v in self.worst_case_parameters.items())
        return (
            f"{self.description}: max |dev| = {self.max_abs_deviation:.3e} "
            f"over {self.instances_tested} instances (worst at {worst})"
        )


def random_density_matrix(d: int, seed: int) -> DensityMatrix:
    """Ginibre state: normalize G G' for Gaussian G. Full rank a.s."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    return DensityMatrix(m / m.trace())


def _weyl_ops(d: int) -> list[np.ndarray]:
    omega = np.exp(2j * np.pi / d)
    ops = []
    for i in range(d):
        x = np.zeros((d, d), dtype=complex)
        for l in range(d):
            x[(i + l) % d, l] = 1.0
        for j in range(d):
            z = np.diag(omega ** (j * np.arange(d)))
            ops.append(x @ z)
    return ops


def brute_force_switch_output(
    d: int, q: float, ctrl: ControlState, rho: DensityMatrix
) -> switch.JointState:
    """Explicit sum over all (d^2+1)^2 Kraus pairs of the switched channel."""
    kraus = [np.sqrt(q) * np.eye(d, dtype=complex)]
    kraus += [np.sqrt(1.0 - q) / d * u for u in _weyl_ops(d)]
    p0 = np.diag([1.0, 0.0]).astype(complex)
    p1 = np.diag([0.0, 1.0]).astype(complex)
    sigma = tensor(rho.matrix, ctrl.density())
    out = np.zeros((2 * d, 2 * d), dtype=complex)
    for ki in kraus:
        for kj in kraus:
            w = tensor(ki @ kj, p0) + tensor(kj @ ki, p1)
            out += w @ sigma @ w.conj().T
    return switch.JointState(d, DensityMatrix(out))


def reference_constants(dps: int = 50) -> dict[str, float]:
    """Capacity reference values at q=0, evaluated in extended precision."""
    with mp.workdps(dps):
        lg2 = mp.log(2)

        def h(vals):
            return float(-sum(v * mp.log(v) / lg2 for v in vals if v != 0))

        out = {}
        for d in (2, 3, 4, 5, 6):
            dm = mp.mpf(d)
            hc = h([mp.mpf(1) / 2 + 1 / (2 * dm**2), mp.mpf(1) / 2 - 1 / (2 * dm**2)])
            plus = [1 / (2 * dm) + 1 / (2 * dm**2)] + [1 / (2 * dm)] * (d - 1)
            minus = [(dm - 1) / (2 * dm**2)] + [1 / (2 * dm)] * (d - 1)
            hm = h(plus + minus)
            out[f"entropy_control_d{d}"] = hc
            out[f"h_min_d{d}"] = hm
            out[f"chi_d{d}"] = float(mp.log(dm) / lg2) + hc - hm
        return out


def _track(worst, dev, instances, **params):
    instances[0] += 1
    if dev > worst[0]:
        worst[0] = dev
        worst[1] = params
    return worst


def verify_equivalence(suite: str, tolerance: float = 1e-9) -> ComparisonReport:
    """Run one named comparison family over its parameter grid."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    worst = [0.0, {}]
    count = [0]

    if suite == "analytic-vs-brute":
        for d in (2, 3, 4):
            for q in (0.0, 0.25, 0.5, 0.75, 1.0):
                for p in (0.0, 0.3, 0.5, 1.0):
                    ctrl = ControlState(p)
                    for seed in range(20):
                        rho = random_density_matrix(d, seed)
                        brute = brute_force_switch_output(d, q, ctrl, rho)
                        analytic = switch.switched_depolarizing_analytic(d, q, ctrl, rho)
                        dev = float(
                            np.abs(brute.state.matrix - analytic.state.matrix).max()
                        )
                        _track(worst, dev, count, d=d, q=q, p=p, seed=seed)

    elif suite == "spectrum-vs-eigensolver":
        ctrl = ControlState(0.5)
        for d in (2, 3, 4, 5):
            for q in (0.0, 0.3, 0.7, 1.0):
                for seed in range(10):
                    rho = random_density_matrix(d, seed)
                    rho_spec = hermitian_spectrum(rho.matrix)
                    predicted = capacity.switched_spectrum(d, q, rho_spec)
                    js = switch.switched_depolarizing_analytic(d, q, ctrl, rho)
                    solved = hermitian_spectrum(js.state.matrix)
                    dev = float(
                        np.abs(
                            np.array(predicted.eigenvalues)
                            - np.array(solved.eigenvalues)
                        ).max()
                    )
                    _track(worst, dev, count, d=d, q=q, p=0.5, seed=seed)

    elif suite == "chi-vs-optimizer":
        for d in (2, 3):
            dep = depolarizing_channel(d, 0.0)
            ch = switch.switch_with_fixed_control(dep, dep, ControlState(0.5))
            result = capacity.optimize_ensemble(ch, d, trials=200, seed=0)
            chi = capacity.holevo_analytic(d, 0.0).chi
            _track(worst, abs(result.chi - chi), count, d=d, q=0.0, p=0.5, seed=0)

    elif suite == "marginals":
        ctrl = ControlState(0.5)
        for d in (2, 3, 4):
            target_ref = np.eye(d) / d
            control_ref = capacity.reduced_control_state(d, 0.0, ctrl).matrix
            for seed in range(10):
                rho = random_density_matrix(d, seed)
                js = brute_force_switch_output(d, 0.0, ctrl, rho)
                tmarg = partial_trace(js.state, d, 2, "A")
                cmarg = partial_trace(js.state, d, 2, "B")
                dev = max(
                    float(np.abs(tmarg.matrix - target_ref).max()),
                    float(np.abs(cmarg.matrix - control_ref).max()),
                )
                _track(worst, dev, count, d=d, q=0.0, p=0.5, seed=seed)

    elif suite == "cptp":
        for d in (2, 3, 4):
            for q in (0.0, 0.4, 1.0):
                kraus = [np.sqrt(q) * np.eye(d, dtype=complex)]
                kraus += [np.sqrt(1.0 - q) / d * u for u in _weyl_ops(d)]
                p0 = np.diag([1.0, 0.0]).astype(complex)
                p1 = np.diag([0.0, 1.0]).astype(complex)
                total = np.zeros((2 * d, 2 * d), dtype=complex)
                for ki in kraus:
                    for kj in kraus:
                        w = tensor(ki @ kj, p0) + tensor(kj @ ki, p1)
                        total += w.conj().T @ w
                dev = float(np.abs(total - np.eye(2 * d)).max())
                _track(worst, dev, count, d=d, q=q, p=0.5, seed=0)

    return ComparisonReport(suite, worst[0], count[0], worst[1])
