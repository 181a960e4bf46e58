"""Component cropping and paste-back on rasters and feature maps."""

from __future__ import annotations

import numpy as np

from .config import COMPONENTS, FUSION_ORDER, ComponentLayout, ConfigError


def crop_window(raster, window):
    """Pixel-exact sub-window copy; works on (H, W) and (H, W, C) arrays."""
    x, y, w, h = window
    H, W = raster.shape[:2]
    if x < 0 or y < 0 or x + w > W or y + h > H:
        raise ConfigError(f"window {window} outside raster {raster.shape[:2]}")
    return np.array(raster[y : y + h, x : x + w], copy=True)


def crop_components(raster, layout: ComponentLayout):
    """Crop every component window; the background crop is the full raster."""
    if raster.shape[0] != layout.resolution or raster.shape[1] != layout.resolution:
        raise ConfigError(
            f"raster {raster.shape[:2]} does not match layout resolution {layout.resolution}"
        )
    return {name: crop_window(raster, layout.window(name)) for name in COMPONENTS}


def paste_window(raster, crop, window):
    """Write ``crop`` back at ``window`` (in place) and return the raster."""
    x, y, w, h = window
    if crop.shape[:2] != (h, w):
        raise ConfigError(f"crop {crop.shape[:2]} does not fit window {window}")
    raster[y : y + h, x : x + w] = crop
    return raster


def paste_components(crops, layout: ComponentLayout):
    """Rebuild the full raster: background first, then the fusion order."""
    canvas = np.array(crops["background"], copy=True)
    for name in FUSION_ORDER:
        paste_window(canvas, crops[name], layout.window(name))
    return canvas
