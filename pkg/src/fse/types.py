"""Configuration and result records shared by both extrapolation variants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ConfigError

ALGORITHMS = ("cfse", "rfse")


@dataclass(frozen=True)
class FseConfig:
    """Parameters of one extrapolation run.

    rho_hat      decay base of the isotropic weighting function, in (0, 1)
    gamma        compensation factor damping each estimated coefficient, in (0, 1]
    iterations   fixed iteration count of the greedy loop
    fft_dims     (rows, cols) of the transform window
    algorithm    "cfse" (one complex atom per iteration) or "rfse"
                 (conjugate pair per iteration, real model)
    basis_target when set, overrides `iterations`: the loop stops as soon as
                 the cumulative selected-basis-function tally reaches the
                 target (0 is allowed and runs the transforms only)
    """

    rho_hat: float = 0.8
    gamma: float = 0.2
    iterations: int = 100
    fft_dims: tuple[int, int] = (64, 64)
    algorithm: str = "cfse"
    basis_target: Optional[int] = None

    def __post_init__(self):
        if not 0.0 < self.rho_hat < 1.0:
            raise ConfigError(f"rho_hat must be in (0, 1), got {self.rho_hat}")
        if not 0.0 < self.gamma <= 1.0:
            raise ConfigError(f"gamma must be in (0, 1], got {self.gamma}")
        if self.iterations < 1:
            raise ConfigError(f"iterations must be >= 1, got {self.iterations}")
        dims = self.fft_dims
        if len(dims) != 2 or any(int(d) != d or d < 1 for d in dims):
            raise ConfigError(f"fft_dims must be two positive integers, got {dims!r}")
        object.__setattr__(self, "fft_dims", (int(dims[0]), int(dims[1])))
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(
                f"algorithm must be one of {ALGORITHMS}, got {self.algorithm!r}"
            )
        if self.basis_target is not None and self.basis_target < 0:
            raise ConfigError(f"basis_target must be >= 0, got {self.basis_target}")

    @property
    def loop_bound(self) -> int:
        """Upper bound on the number of iterations the loop may execute."""
        if self.basis_target is not None:
            return self.basis_target
        return self.iterations


@dataclass(frozen=True)
class IterationRecord:
    """One greedy iteration: which atom was added and at what weight.

    `residual_energy` is the weighted residual energy after the update,
    tracked through the exact per-iteration decrease identity.
    `self_conjugate` marks rfse iterations that selected a frequency equal
    to its own conjugate mirror (single real atom instead of a pair).
    """

    index: int
    frequency: tuple[int, int]
    coefficient: complex
    residual_energy: float
    self_conjugate: bool = False


@dataclass
class ExtrapolationResult:
    """Output of one extrapolation run.

    reconstructed  real-valued grid; support and padding samples are the
                   input values unchanged, loss samples hold the model
    model          full complex model over the window (diagnostic)
    trace          one IterationRecord per executed iteration
    basis_count    cumulative selected-basis-function tally (counts both
                   members of a conjugate pair, repeats included)
    """

    reconstructed: np.ndarray
    model: np.ndarray
    trace: list[IterationRecord] = field(default_factory=list)
    basis_count: int = 0
