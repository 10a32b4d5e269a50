"""Grayscale image input, overlay/metrics output.

Input formats: binary PGM (P5, 8-bit) and 8-bit grayscale or gray-palette
PNG. Color inputs are rejected rather than silently converted; the
segmentation is defined on scalar intensity. Loaded values are mapped to
floats in [0, 255], row-major with the origin at the top left.

Overlays render the grayscale image with the starting contour in pure
green and the final contour in pure red (red drawn last), written as PNG
or as binary PPM (P6) when the path ends in ``.ppm``.
"""

import numpy as np
from PIL import Image

from .errors import FormatError
from .field import as_field

__all__ = [
    "load_image",
    "save_grayscale",
    "save_overlay",
    "write_metrics",
    "mask_boundary",
]

_PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"


def load_image(path):
    """Read an 8-bit grayscale image as a float field in [0, 255]."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:2] == b"P5":
        return _load_pgm(data, path)
    if data[: len(_PNG_SIGNATURE)] == _PNG_SIGNATURE:
        return _load_png(path)
    if data[:2] in (b"P2", b"P3", b"P6"):
        raise FormatError(
            f"{path}: only binary grayscale PGM (P5) is supported, got {data[:2].decode('ascii', 'replace')}"
        )
    raise FormatError(f"{path}: not a P5 PGM or PNG file")


def _pgm_header_tokens(data, path):
    """Yield (token, end_index) for the three header tokens after the magic."""
    i = 2  # past "P5"
    tokens = []
    while len(tokens) < 3:
        while i < len(data) and data[i : i + 1].isspace():
            i += 1
        if i < len(data) and data[i : i + 1] == b"#":
            while i < len(data) and data[i] not in (0x0A, 0x0D):
                i += 1
            continue
        start = i
        while i < len(data) and not data[i : i + 1].isspace() and data[i : i + 1] != b"#":
            i += 1
        if start == i:
            raise FormatError(f"{path}: truncated PGM header")
        tokens.append(data[start:i])
    return tokens, i


def _load_pgm(data, path):
    tokens, end = _pgm_header_tokens(data, path)
    try:
        width, height, maxval = (int(tok) for tok in tokens)
    except ValueError:
        raise FormatError(f"{path}: non-numeric PGM header fields {tokens}") from None
    if width < 1 or height < 1:
        raise FormatError(f"{path}: bad PGM dimensions {width}x{height}")
    if not 1 <= maxval <= 255:
        raise FormatError(
            f"{path}: PGM maxval {maxval} unsupported (8-bit only, 1..255)"
        )
    raster = data[end + 1 :]  # single whitespace byte separates header and raster
    if len(raster) < width * height:
        raise FormatError(
            f"{path}: truncated PGM raster ({len(raster)} bytes, expected {width * height})"
        )
    values = np.frombuffer(raster[: width * height], dtype=np.uint8)
    field = values.reshape(height, width).astype(np.float64)
    if maxval != 255:
        field = field * (255.0 / maxval)
    return field


def _load_png(path):
    try:
        img = Image.open(path)
        img.load()
    except OSError as exc:
        raise FormatError(f"{path}: corrupt or unreadable PNG ({exc})") from exc
    if img.mode == "P":
        palette = img.getpalette()
        if palette is None:
            raise FormatError(f"{path}: paletted PNG without a palette")
        triples = list(zip(palette[0::3], palette[1::3], palette[2::3]))
        if any(r != g or g != b for r, g, b in triples):
            raise FormatError(f"{path}: palette is not grayscale")
        img = img.convert("L")
    if img.mode != "L":
        raise FormatError(
            f"{path}: mode {img.mode} is not 8-bit grayscale (convert it first)"
        )
    return np.asarray(img, dtype=np.float64)


def save_grayscale(field, path):
    """Write a field with values in [0, 255] as PGM (``.pgm``) or PNG."""
    field = as_field(field)
    data = np.rint(np.clip(field, 0.0, 255.0)).astype(np.uint8)
    path = str(path)
    if path.endswith(".pgm"):
        height, width = data.shape
        with open(path, "wb") as fh:
            fh.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
            fh.write(data.tobytes())
    else:
        Image.fromarray(data, mode="L").save(path)


def mask_boundary(mask):
    """Pixels of the mask with at least one 4-neighbor outside it.

    Off-grid neighbors count as outside, so a mask touching the image edge
    is bounded by the edge ring.
    """
    m = np.asarray(mask, dtype=bool)
    p = np.pad(m, 1, mode="constant", constant_values=False)
    interior = p[1:-1, 2:] & p[1:-1, :-2] & p[2:, 1:-1] & p[:-2, 1:-1]
    return m & ~interior


def save_overlay(I, initial_mask, final_mask, path):
    """Grayscale base with the initial contour green and the final red."""
    I = as_field(I)
    initial_mask = np.asarray(initial_mask, dtype=bool)
    final_mask = np.asarray(final_mask, dtype=bool)
    if initial_mask.shape != I.shape or final_mask.shape != I.shape:
        raise ValueError("overlay masks must match the image shape")
    base = np.rint(np.clip(I, 0.0, 255.0)).astype(np.uint8)
    rgb = np.repeat(base[:, :, None], 3, axis=2)
    green = mask_boundary(initial_mask)
    rgb[green] = (0, 255, 0)
    red = mask_boundary(final_mask)
    rgb[red] = (255, 0, 0)

    path = str(path)
    if path.endswith(".ppm"):
        height, width = base.shape
        with open(path, "wb") as fh:
            fh.write(f"P6\n{width} {height}\n255\n".encode("ascii"))
            fh.write(rgb.tobytes())
    else:
        Image.fromarray(rgb, mode="RGB").save(path)


def write_metrics(rows, path):
    """Per-iteration CSV: iter, sign_change_frac, convolutions, wall_ms."""
    with open(path, "w", newline="") as fh:
        fh.write("iter,sign_change_frac,convolutions,wall_ms\n")
        for row in rows:
            fh.write(
                f"{row.iteration},{row.sign_change_frac!r},{row.convolutions},{row.wall_ms!r}\n"
            )
