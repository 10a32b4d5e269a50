"""2-D scalar fields and the finite-difference operators built on them.

A scalar field is a 2-D float64 numpy array indexed ``[row, col]``, i.e.
``f[y, x]``. Image intensities, level-set values and every derived
quantity all travel through the same representation.

All stencils use replicate-edge (Neumann) boundary handling: the array is
padded by repeating its border values and the central stencil is applied
everywhere, so border columns/rows see one-sided effective differences.
Grid spacing is one pixel throughout.
"""

import numpy as np

__all__ = ["as_field", "gradient", "laplacian", "curvature"]


def as_field(values):
    """Coerce input to a 2-D float64 array (no copy when already one)."""
    f = np.asarray(values, dtype=np.float64)
    if f.ndim != 2:
        raise ValueError(f"scalar field must be 2-D, got shape {f.shape}")
    return f


def _require_min_size(f, op):
    if f.shape[0] < 3 or f.shape[1] < 3:
        raise ValueError(
            f"{op} needs a field of at least 3x3, got {f.shape[0]}x{f.shape[1]}"
        )


def _dx_from_pad(p):
    out = np.subtract(p[1:-1, 2:], p[1:-1, :-2])
    out *= 0.5
    return out


def _dy_from_pad(p):
    out = np.subtract(p[2:, 1:-1], p[:-2, 1:-1])
    out *= 0.5
    return out


def gradient(f):
    """Partial derivatives (fx, fy) by central differences.

    Returns the pair of fields (df/dx, df/dy) where x runs along columns
    and y along rows. Border pixels use the replicated edge value, which
    reduces to a half-weighted one-sided difference there.
    """
    f = as_field(f)
    _require_min_size(f, "gradient")
    p = np.pad(f, 1, mode="edge")
    return _dx_from_pad(p), _dy_from_pad(p)


def laplacian(f):
    """5-point Laplacian f(x+1,y)+f(x-1,y)+f(x,y+1)+f(x,y-1)-4f(x,y)."""
    f = as_field(f)
    _require_min_size(f, "laplacian")
    p = np.pad(f, 1, mode="edge")
    out = np.add(p[1:-1, 2:], p[1:-1, :-2])
    out += p[2:, 1:-1]
    out += p[:-2, 1:-1]
    out -= 4.0 * f
    return out


def curvature(f, eta=1e-10):
    """div(grad f / |grad f|), the curvature of the level lines of f.

    The gradient magnitude is floored at ``eta`` so flat regions (binary
    initializations, constants) yield zero instead of 0/0.
    """
    if eta <= 0:
        raise ValueError(f"eta must be positive, got {eta}")
    f = as_field(f)
    _require_min_size(f, "curvature")
    fx, fy = gradient(f)
    mag = fx * fx
    mag += fy * fy
    np.sqrt(mag, out=mag)
    np.maximum(mag, eta, out=mag)
    fx /= mag  # fx, fy are owned here, reuse them as the unit normal
    fy /= mag
    out = _dx_from_pad(np.pad(fx, 1, mode="edge"))
    out += _dy_from_pad(np.pad(fy, 1, mode="edge"))
    return out
