"""Deterministic synthetic inputs used by the tests, demos, and benchmark.

``two_region_image`` draws a sharp elliptical object (level 160) on a
darker background (level 60) and optionally multiplies a left-to-right
linear gain ramp across it to mimic uneven illumination; the ground-truth
object mask is returned alongside. ``smooth_random_field`` blurs seeded
white noise and tapers it to zero near the borders, which keeps boundary
effects out of the heat-equation comparison. Both procedures are fully
reproducible: same arguments, same arrays.
"""

import numpy as np

from .kernel import separable_blur
from .regularize import Circle

__all__ = [
    "OBJECT_LEVEL",
    "BACKGROUND_LEVEL",
    "two_region_image",
    "smooth_random_field",
    "default_contour",
]

OBJECT_LEVEL = 160.0
BACKGROUND_LEVEL = 60.0


def two_region_image(size=128, gain=None):
    """Two-level test image and its ground-truth object mask.

    Parameters
    ----------
    size : int
        Side length of the square image.
    gain : (float, float) or None
        When given, per-column multiplicative gain ramping linearly from
        ``gain[0]`` at the left edge to ``gain[1]`` at the right edge.
        (0.5, 1.5) makes the bright object's dim side overlap the
        background's bright side, which defeats any global threshold.

    Returns
    -------
    image : ndarray
        float64 intensities in [0, 255].
    truth : ndarray of bool
        True on the object.
    """
    yy, xx = np.mgrid[0:size, 0:size].astype(np.float64)
    cx = cy = (size - 1) / 2.0
    a = 0.27 * size  # ellipse semi-axis along x
    b = 0.19 * size  # ellipse semi-axis along y
    truth = ((xx - cx) / a) ** 2 + ((yy - cy) / b) ** 2 <= 1.0
    image = np.where(truth, OBJECT_LEVEL, BACKGROUND_LEVEL)
    if gain is not None:
        lo, hi = gain
        ramp = np.linspace(float(lo), float(hi), size)
        image = image * ramp[None, :]
    return image, truth


def smooth_random_field(size=64, seed=7, blur_sigma=2.5, taper=None):
    """Seeded white noise, Gaussian-blurred, tapered to zero at the borders.

    ``taper`` is the width in pixels of the raised-cosine roll-off on each
    side (defaults to a quarter of the size).
    """
    rng = np.random.default_rng(seed)
    f = rng.standard_normal((size, size))
    radius = int(np.ceil(4.0 * blur_sigma))
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    taps = np.exp(-(x * x) / (2.0 * blur_sigma * blur_sigma))
    f = separable_blur(f, taps / taps.sum())

    if taper is None:
        taper = size // 4
    window = np.ones(size)
    ramp = 0.5 * (1.0 - np.cos(np.pi * (np.arange(taper) + 0.5) / taper))
    window[:taper] = ramp
    window[size - taper :] = ramp[::-1]
    return f * np.outer(window, window)


def default_contour(size=128):
    """Centered circular starting contour used by the demos and benchmark."""
    c = (size - 1) / 2.0
    return Circle(cx=c, cy=c, r=size / 5.0)
