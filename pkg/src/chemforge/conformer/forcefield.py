"""Potential energy, gradient, and relaxation over a kernel backend.

The compiled kernel is preferred when it imported cleanly; setting
CHEMFORGE_FORCE_PY=1 in the environment pins the numpy fallback.  Both
backends implement the same arithmetic, so results agree to rounding.
"""

from __future__ import annotations

import math
import os

import numpy as np

from ..chem.graph import MolGraph
from .params import ForceFieldParams, default_params
from .topology import FFTopology, build_topology
from .types import Conformation, NumericalBlowup

if os.environ.get("CHEMFORGE_FORCE_PY"):
    from . import _ffpy as _kernel

    KERNEL_NAME = "numpy"
else:
    try:
        from . import _ffext as _kernel  # type: ignore[no-redef]

        KERNEL_NAME = "compiled"
    except ImportError:
        from . import _ffpy as _kernel  # type: ignore[no-redef]

        KERNEL_NAME = "numpy"


def _evaluate(
    coords: np.ndarray, topo: FFTopology, params: ForceFieldParams
) -> tuple[float, np.ndarray]:
    return _kernel.energy_gradient(
        np.ascontiguousarray(coords, dtype=np.float64),
        topo.bond_a,
        topo.bond_b,
        topo.bond_rest,
        params.bond_k,
        topo.angle_left,
        topo.angle_center,
        topo.angle_right,
        topo.angle_cos0,
        params.angle_k,
        topo.pair_a,
        topo.pair_b,
        params.repulsion_sigma,
        params.repulsion_k,
    )


def potential_energy(
    c: Conformation, params: ForceFieldParams | None = None
) -> float:
    params = params or default_params()
    topo = build_topology(c.graph, params)
    energy, _ = _evaluate(c.coords, topo, params)
    return energy


def gradient(c: Conformation, params: ForceFieldParams | None = None) -> np.ndarray:
    params = params or default_params()
    topo = build_topology(c.graph, params)
    _, grad = _evaluate(c.coords, topo, params)
    return grad


def relax(
    c: Conformation,
    params: ForceFieldParams | None = None,
    record_energies: list[float] | None = None,
) -> Conformation:
    """Gradient descent with backtracking line search.

    The trial step along the negative gradient is rescaled each iteration
    from the last accepted displacement (Barzilai-Borwein spectral step),
    then cut back until the Armijo condition holds, so every accepted
    step lowers the energy and the recorded sequence is non-increasing.
    Raises NumericalBlowup the moment energy stops being finite.
    """
    params = params or default_params()
    topo = build_topology(c.graph, params)
    coords = np.array(c.coords, dtype=np.float64)
    energy, grad = _evaluate(coords, topo, params)
    _check_finite(energy, grad)
    if record_energies is not None:
        record_energies.append(energy)

    step = params.step_size
    prev_coords: np.ndarray | None = None
    prev_grad: np.ndarray | None = None
    converged = False
    for _ in range(params.max_iters):
        gnorm2 = float((grad**2).sum())
        if math.sqrt(gnorm2) < params.grad_tol:
            converged = True
            break
        if prev_coords is not None:
            disp = coords - prev_coords
            dgrad = grad - prev_grad
            curvature = float((disp * dgrad).sum())
            if curvature > 1e-14:
                step = float((disp**2).sum()) / curvature
            step = min(max(step, 1e-6), 1.0)
        trial_step = step
        accepted = False
        while trial_step > 1e-14:
            trial = coords - trial_step * grad
            trial_energy, trial_grad = _evaluate(trial, topo, params)
            _check_finite(trial_energy, trial_grad)
            if trial_energy <= energy - 1e-4 * trial_step * gnorm2:
                prev_coords, prev_grad = coords, grad
                coords, energy, grad = trial, trial_energy, trial_grad
                accepted = True
                break
            trial_step *= 0.5
        if not accepted:
            # No descent at float precision; report where we stopped.
            converged = math.sqrt(gnorm2) < params.grad_tol * 10
            break
        if record_energies is not None:
            record_energies.append(energy)
    else:
        converged = math.sqrt(float((grad**2).sum())) < params.grad_tol

    return Conformation(c.graph, coords, energy=energy, converged=converged)


def _check_finite(energy: float, grad: np.ndarray) -> None:
    if not math.isfinite(energy) or not np.isfinite(grad).all():
        raise NumericalBlowup(
            "potential energy or gradient became non-finite; "
            "check params and starting geometry"
        )


def make_conformation(
    m: MolGraph,
    seed: int = 0,
    params: ForceFieldParams | None = None,
) -> Conformation:
    """Embed then relax in one call."""
    from .embed import embed_conformation

    return relax(embed_conformation(m, seed), params)
