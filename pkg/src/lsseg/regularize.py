"""Smoothed Heaviside/Dirac pair, level-set initialization, and the
distance-regularization force.

The Heaviside is the arctan form H(z) = (1 + (2/pi) arctan(z/eps)) / 2 and
the Dirac is its exact derivative, a Cauchy density. Both are positive
everywhere, so the contour can form far from where it started.

``dist_reg_term`` penalizes deviation of |grad phi| from 1 and keeps phi
close to a signed distance function during evolution; no re-initialization
procedure exists anywhere in this package.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from .field import as_field, curvature, laplacian

__all__ = [
    "Circle",
    "Rectangle",
    "MaskFile",
    "ContourSpec",
    "heaviside",
    "dirac",
    "init_phi",
    "dist_reg_term",
]


@dataclass(frozen=True)
class Circle:
    cx: float
    cy: float
    r: float


@dataclass(frozen=True)
class Rectangle:
    x0: float
    y0: float
    x1: float
    y1: float


@dataclass(frozen=True)
class MaskFile:
    path: str


ContourSpec = Union[Circle, Rectangle, MaskFile]


def heaviside(z, epsilon=1.0):
    """Smoothed unit step, strictly inside (0, 1) and increasing in z."""
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    z = np.asarray(z, dtype=np.float64)
    return 0.5 * (1.0 + (2.0 / np.pi) * np.arctan(z / epsilon))


def dirac(z, epsilon=1.0):
    """Derivative of ``heaviside``: (1/pi) eps / (eps^2 + z^2)."""
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    z = np.asarray(z, dtype=np.float64)
    return (epsilon / np.pi) / (epsilon * epsilon + z * z)


def region_mask(spec, width, height):
    """Boolean inside-region mask for a contour spec on a width x height grid.

    Boundary pixels count as inside. The mask variant reads an 8-bit
    grayscale image whose nonzero pixels are inside.
    """
    if width < 1 or height < 1:
        raise ValueError(f"grid must be at least 1x1, got {width}x{height}")
    if isinstance(spec, Circle):
        if spec.r <= 0:
            raise ValueError(f"circle radius must be positive, got {spec.r}")
        if not (0 <= spec.cx < width and 0 <= spec.cy < height):
            raise ValueError(
                f"circle center ({spec.cx}, {spec.cy}) outside {width}x{height} grid"
            )
        yy, xx = np.mgrid[0:height, 0:width]
        return (xx - spec.cx) ** 2 + (yy - spec.cy) ** 2 <= spec.r**2
    if isinstance(spec, Rectangle):
        if not (spec.x0 < spec.x1 and spec.y0 < spec.y1):
            raise ValueError("rectangle needs x0 < x1 and y0 < y1")
        if not (0 <= spec.x0 and spec.x1 <= width - 1 and 0 <= spec.y0 and spec.y1 <= height - 1):
            raise ValueError(f"rectangle corners outside {width}x{height} grid")
        yy, xx = np.mgrid[0:height, 0:width]
        return (xx >= spec.x0) & (xx <= spec.x1) & (yy >= spec.y0) & (yy <= spec.y1)
    if isinstance(spec, MaskFile):
        from .image_io import load_image

        img = load_image(spec.path)
        if img.shape != (height, width):
            raise ValueError(
                f"mask {spec.path} is {img.shape[1]}x{img.shape[0]}, grid is {width}x{height}"
            )
        return img > 0
    raise TypeError(f"unsupported contour spec: {spec!r}")


def init_phi(spec, width, height, c0=2.0):
    """Binary level-set initialization: +c0 inside the region, -c0 outside.

    The object is the positive side, so the evolving contour is the set
    where phi crosses zero from above.
    """
    if c0 <= 0:
        raise ValueError(f"c0 must be positive, got {c0}")
    inside = region_mask(spec, width, height)
    return np.where(inside, float(c0), -float(c0))


def dist_reg_term(phi, eta=1e-10):
    """Signed-distance restoring force: laplacian(phi) - curvature(phi).

    Zero when |grad phi| is 1 everywhere; an explicit step along it drives
    phi toward a signed distance function.
    """
    phi = as_field(phi)
    return laplacian(phi) - curvature(phi, eta)
