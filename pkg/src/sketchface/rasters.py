"""Raster conventions and PNG I/O.

Images are float arrays in [0, 1]: RGB as (H, W, 3), sketches as (H, W) with
1 = white background and 0 = stroke. Torch tensors use (C, H, W).
"""

from __future__ import annotations

import io

import numpy as np
import torch
from PIL import Image

# Rec.709 luma coefficients; sketch extraction depends on luminance only.
LUMA = np.array([0.2126, 0.7152, 0.0722])


def luminance(image):
    """Luminance of an (H, W, 3) image in [0, 1]."""
    image = np.asarray(image, dtype=np.float64)
    if image.ndim != 3 or image.shape[2] != 3:
        raise ValueError(f"expected (H,W,3) image, got {image.shape}")
    return image @ LUMA


def load_image(path, size=None):
    """Load a PNG/JPEG as float RGB (H, W, 3) in [0, 1], optionally resized."""
    with Image.open(path) as im:
        im = im.convert("RGB")
        if size is not None and im.size != (size, size):
            im = im.resize((size, size), Image.LANCZOS)
        return np.asarray(im, dtype=np.float32) / 255.0


def load_sketch(path, size=None):
    """Load a sketch PNG as float (H, W) strictly in {0, 1}."""
    with Image.open(path) as im:
        im = im.convert("L")
        if size is not None and im.size != (size, size):
            im = im.resize((size, size), Image.NEAREST)
        arr = np.asarray(im, dtype=np.float32) / 255.0
    return (arr > 0.5).astype(np.float32)


def save_image(path, image):
    Image.fromarray(to_uint8(image)).save(path, format="PNG")


def to_uint8(image):
    arr = np.asarray(image, dtype=np.float64)
    return (np.clip(arr, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)


def encode_png(image) -> bytes:
    buf = io.BytesIO()
    Image.fromarray(to_uint8(image)).save(buf, format="PNG")
    return buf.getvalue()


def decode_png(data: bytes, mode="RGB"):
    with Image.open(io.BytesIO(data)) as im:
        im = im.convert(mode)
        arr = np.asarray(im, dtype=np.float32) / 255.0
    return arr


def to_tensor(image, dtype=torch.float32):
    """(H, W, C) or (H, W) numpy in [0,1] -> (C, H, W) tensor."""
    arr = np.asarray(image)
    if arr.ndim == 2:
        arr = arr[None]
    elif arr.ndim == 3:
        arr = arr.transpose(2, 0, 1)
    else:
        raise ValueError(f"expected 2D or 3D raster, got shape {arr.shape}")
    return torch.from_numpy(np.ascontiguousarray(arr)).to(dtype)


def to_numpy(tensor):
    """(C, H, W) or (1/3, H, W) tensor -> (H, W) or (H, W, C) numpy."""
    arr = tensor.detach().cpu().numpy()
    if arr.ndim != 3:
        raise ValueError(f"expected (C,H,W), got {arr.shape}")
    if arr.shape[0] == 1:
        return arr[0]
    return arr.transpose(1, 2, 0)


def gray_to_rgb(sketch: torch.Tensor) -> torch.Tensor:
    """Replicate a (1, H, W) sketch tensor to (3, H, W) for RGB-only nets."""
    if sketch.dim() == 3 and sketch.shape[0] == 1:
        return sketch.expand(3, -1, -1)
    if sketch.dim() == 4 and sketch.shape[1] == 1:
        return sketch.expand(-1, 3, -1, -1)
    raise ValueError(f"expected single-channel tensor, got {tuple(sketch.shape)}")
