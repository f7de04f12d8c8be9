"""Area masks and the isotropic exponentially decaying weighting function.

A window is partitioned into three areas: loss (the unknown samples to be
reconstructed), support (known samples that drive model generation), and
padding (window samples outside the usable area, e.g. beyond the image
border when a window is embedded in a larger transform grid). Loss and
padding samples get weight zero; support samples are weighted by their
Euclidean distance from the window center.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Optional

import numpy as np

from .errors import ConfigError
from .spectral import dft2


class Area(IntEnum):
    PADDING = 0
    SUPPORT = 1
    LOSS = 2


Rect = tuple[int, int, int, int]  # (top, left, height, width)


@dataclass(frozen=True, eq=False)
class AreaMask:
    """Per-sample area labels over a window."""

    labels: np.ndarray

    def __post_init__(self):
        labels = np.asarray(self.labels, dtype=np.int8)
        if labels.ndim != 2:
            raise ConfigError(f"mask labels must be 2-dimensional, got {labels.shape}")
        if not np.isin(labels, (Area.PADDING, Area.SUPPORT, Area.LOSS)).all():
            raise ConfigError("mask labels must be Area values")
        if not (labels == Area.SUPPORT).any():
            raise ConfigError("mask has no support samples")
        object.__setattr__(self, "labels", labels)

    @property
    def shape(self) -> tuple[int, int]:
        return self.labels.shape

    @property
    def support(self) -> np.ndarray:
        return self.labels == Area.SUPPORT

    @property
    def loss(self) -> np.ndarray:
        return self.labels == Area.LOSS

    @property
    def padding(self) -> np.ndarray:
        return self.labels == Area.PADDING

    @classmethod
    def from_loss(
        cls, loss: np.ndarray, padding: Optional[np.ndarray] = None
    ) -> "AreaMask":
        """Build a mask from boolean loss (and optional padding) maps;
        everything else is support."""
        loss = np.asarray(loss, dtype=bool)
        labels = np.full(loss.shape, Area.SUPPORT, dtype=np.int8)
        if padding is not None:
            padding = np.asarray(padding, dtype=bool)
            if padding.shape != loss.shape:
                raise ConfigError("padding map shape differs from loss map shape")
            labels[padding] = Area.PADDING
        labels[loss] = Area.LOSS
        return cls(labels)


def build_mask(
    fft_dims: tuple[int, int],
    loss_rect: Rect,
    support_width: int,
    valid_rect: Optional[Rect] = None,
) -> AreaMask:
    """Lay out a central loss block with a surrounding support ring.

    The support ring is `support_width` samples wide around the loss
    rectangle, clipped to the window and to `valid_rect` (the portion of the
    window backed by real image samples; everything outside it becomes
    padding). Remaining window samples are padding.
    """
    M, N = int(fft_dims[0]), int(fft_dims[1])
    top, left, height, width = (int(v) for v in loss_rect)
    if support_width < 0:
        raise ConfigError(f"support_width must be >= 0, got {support_width}")
    if height < 1 or width < 1:
        raise ConfigError(f"loss rectangle must be non-empty, got {loss_rect}")
    if top < 0 or left < 0 or top + height > M or left + width > N:
        raise ConfigError(
            f"loss rectangle {loss_rect} does not fit inside the {M}x{N} window"
        )

    labels = np.full((M, N), Area.PADDING, dtype=np.int8)

    ring_top = max(0, top - support_width)
    ring_left = max(0, left - support_width)
    ring_bottom = min(M, top + height + support_width)
    ring_right = min(N, left + width + support_width)
    labels[ring_top:ring_bottom, ring_left:ring_right] = Area.SUPPORT

    if valid_rect is not None:
        vt, vl, vh, vw = (int(v) for v in valid_rect)
        valid = np.zeros((M, N), dtype=bool)
        valid[max(0, vt):min(M, vt + vh), max(0, vl):min(N, vl + vw)] = True
        labels[~valid] = Area.PADDING
        if not valid[top:top + height, left:left + width].all():
            raise ConfigError(
                f"loss rectangle {loss_rect} extends outside the valid region {valid_rect}"
            )

    labels[top:top + height, left:left + width] = Area.LOSS

    if not (labels == Area.SUPPORT).any():
        raise ConfigError("mask geometry leaves no support samples")
    return AreaMask(labels)


def build_weight(mask: AreaMask, rho_hat: float) -> np.ndarray:
    """Evaluate the isotropic decaying weighting function on a mask.

    w[m, n] = rho_hat ** sqrt((m - (M-1)/2)^2 + (n - (N-1)/2)^2) on support
    samples, 0 on loss and padding. The distance is taken from the center of
    the full window, and no small-weight thresholding is applied.
    """
    if not 0.0 < rho_hat < 1.0:
        raise ConfigError(f"rho_hat must be in (0, 1), got {rho_hat}")
    M, N = mask.shape
    dm = np.arange(M, dtype=np.float64) - (M - 1) / 2.0
    dn = np.arange(N, dtype=np.float64) - (N - 1) / 2.0
    dist = np.hypot(dm.reshape(-1, 1), dn.reshape(1, -1))
    w = np.power(rho_hat, dist)
    w[~mask.support] = 0.0
    return w


def weight_spectrum(w: np.ndarray) -> np.ndarray:
    """Forward transform of the weight matrix.

    The DC bin equals the plain sum of all weights; it is real and positive
    for any nonempty support.
    """
    w = np.asarray(w, dtype=np.float64)
    if not (w > 0).any():
        raise ConfigError("all-zero weight matrix (empty support)")
    return dft2(w)
