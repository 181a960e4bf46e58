"""Procedural portrait corpus for desk-scale runs, tests and demos.

Draws aligned, FFHQ-like cartoon portraits whose facial features land inside
the default component windows. Geometry (feature sizes, positions, brow/lip
shapes, wrinkles, hair strands) and appearance (skin, hair, iris, lip,
clothing, background colors) vary independently per sample, which is exactly
the structure the disentanglement stages need. Fully deterministic given
(seed, index).
"""

from __future__ import annotations

import colorsys
from pathlib import Path

import numpy as np
from PIL import Image, ImageDraw

SUPERSAMPLE = 2


def _hsv(rng, h_lo, h_hi, s_lo, s_hi, v_lo, v_hi):
    h = rng.uniform(h_lo, h_hi) % 1.0
    rgb = colorsys.hsv_to_rgb(h, rng.uniform(s_lo, s_hi), rng.uniform(v_lo, v_hi))
    return tuple(int(c * 255) for c in rgb)


def _shade(color, factor):
    return tuple(int(min(255, max(0, c * factor))) for c in color)


def generate_portrait(side, rng):
    """One (side, side, 3) float portrait in [0, 1]."""
    S = side * SUPERSAMPLE

    def P(x, y):
        return (x * S, y * S)

    def box(cx, cy, rx, ry):
        return [cx * S - rx * S, cy * S - ry * S, cx * S + rx * S, cy * S + ry * S]

    lw = max(1, int(round(S / 256)))  # hairline stroke width

    skin = _hsv(rng, 0.02, 0.10, 0.15, 0.5, 0.55, 0.95)
    hair = _hsv(rng, 0.0, 1.0, 0.1, 0.8, 0.1, 0.7)
    iris = _hsv(rng, 0.05, 0.65, 0.3, 0.8, 0.2, 0.6)
    lip = _hsv(rng, -0.03, 0.03, 0.3, 0.8, 0.45, 0.85)
    cloth = _hsv(rng, 0.0, 1.0, 0.2, 0.9, 0.2, 0.9)
    bg_a = _hsv(rng, 0.0, 1.0, 0.0, 0.45, 0.55, 0.95)
    bg_b = _hsv(rng, 0.0, 1.0, 0.0, 0.45, 0.55, 0.95)

    # Vertical background gradient (linear ramps leave no DoG response).
    t = np.linspace(0.0, 1.0, S)[:, None, None]
    grad = (1 - t) * np.array(bg_a)[None, None] + t * np.array(bg_b)[None, None]
    canvas = np.broadcast_to(grad, (S, S, 3)).astype(np.uint8)
    im = Image.fromarray(np.array(canvas))
    draw = ImageDraw.Draw(im)

    head_rx = rng.uniform(0.27, 0.33)
    head_ry = rng.uniform(0.37, 0.42)
    head_cy = 0.52

    # Shoulders and neck.
    sh_y = rng.uniform(0.86, 0.92)
    draw.polygon(
        [P(0.5 - rng.uniform(0.32, 0.45), 1.0), P(0.5 - 0.18, sh_y),
         P(0.5 + 0.18, sh_y), P(0.5 + rng.uniform(0.32, 0.45), 1.0)],
        fill=cloth,
    )
    draw.rectangle([*P(0.42, 0.80), *P(0.58, sh_y + 0.02)], fill=_shade(skin, 0.92))

    # Hair mass behind the face, then the face, then ears.
    hair_ry = head_ry * rng.uniform(1.0, 1.25)
    draw.ellipse(box(0.5, head_cy - 0.06, head_rx * rng.uniform(1.08, 1.2), hair_ry), fill=hair)
    draw.ellipse(box(0.5, head_cy, head_rx, head_ry), fill=skin)
    ear_ry = rng.uniform(0.035, 0.05)
    for sx in (-1, 1):
        draw.ellipse(box(0.5 + sx * head_rx, 0.5, 0.025, ear_ry), fill=_shade(skin, 0.95))

    # Fringe: filled cap over the forehead only, plus individual strands.
    fringe_y = rng.uniform(0.22, 0.30)
    draw.chord(box(0.5, fringe_y, head_rx * 1.03, fringe_y - 0.10),
               180 + rng.uniform(-8, 8), 360 + rng.uniform(-8, 8), fill=hair)
    strand_color = _shade(hair, rng.uniform(0.55, 0.8))
    for _ in range(rng.integers(10, 26)):
        x0 = rng.uniform(0.25, 0.75)
        y0 = rng.uniform(0.14, fringe_y - 0.02)
        x1 = x0 + rng.uniform(-0.10, 0.10)
        y1 = y0 + rng.uniform(0.05, 0.14)
        xm = (x0 + x1) / 2 + rng.uniform(-0.03, 0.03)
        pts = [P(x0, y0), P(xm, (y0 + y1) / 2), P(x1, y1)]
        draw.line(pts, fill=strand_color, width=lw, joint="curve")

    # Eyes with brows; centers sit at the component window centers.
    eye_y = 0.425 + rng.uniform(-0.015, 0.015)
    eye_rx = rng.uniform(0.05, 0.075)
    eye_ry = eye_rx * rng.uniform(0.45, 0.62)
    iris_r = eye_ry * rng.uniform(0.75, 0.95)
    brow_w = max(lw * 2, int(S * rng.uniform(0.006, 0.012)))
    brow_color = _shade(hair, 0.7)
    for cx in (0.335 + rng.uniform(-0.012, 0.012), 0.665 + rng.uniform(-0.012, 0.012)):
        draw.ellipse(box(cx, eye_y, eye_rx, eye_ry), fill=(250, 250, 250), outline=(40, 30, 30), width=lw)
        draw.ellipse(box(cx, eye_y, iris_r, iris_r), fill=iris)
        draw.ellipse(box(cx, eye_y, iris_r * 0.45, iris_r * 0.45), fill=(15, 15, 15))
        by = eye_y - eye_ry - rng.uniform(0.025, 0.045)
        tilt = rng.uniform(-0.012, 0.018)
        draw.line([P(cx - eye_rx, by + tilt), P(cx, by - 0.01), P(cx + eye_rx, by + tilt)],
                  fill=brow_color, width=brow_w, joint="curve")

    # Nose: bridge line, tip shading, nostrils.
    nose_tip_y = 0.62 + rng.uniform(-0.015, 0.015)
    bridge_x = 0.5 + rng.uniform(-0.008, 0.008)
    draw.line([P(bridge_x, 0.50), P(bridge_x - 0.012, nose_tip_y)], fill=_shade(skin, 0.72), width=lw)
    draw.ellipse(box(0.5, nose_tip_y, 0.028, 0.018), fill=_shade(skin, 0.9))
    for sx in (-1, 1):
        draw.arc(box(0.5 + sx * 0.022, nose_tip_y + 0.004, 0.012, 0.009),
                 0 if sx < 0 else 90, 180 if sx < 0 else 270, fill=(60, 40, 40), width=lw)

    # Mouth: two lip lobes and a dark mid line.
    mouth_y = 0.785 + rng.uniform(-0.02, 0.02)
    mouth_rx = rng.uniform(0.07, 0.115)
    lip_ry = rng.uniform(0.018, 0.032)
    draw.ellipse(box(0.5, mouth_y - lip_ry * 0.5, mouth_rx, lip_ry), fill=lip)
    draw.ellipse(box(0.5, mouth_y + lip_ry * 0.6, mouth_rx * 0.85, lip_ry * 1.1), fill=_shade(lip, 0.85))
    curve = rng.uniform(-0.01, 0.015)
    draw.line([P(0.5 - mouth_rx, mouth_y), P(0.5, mouth_y + curve), P(0.5 + mouth_rx, mouth_y)],
              fill=_shade(lip, 0.45), width=lw, joint="curve")

    # Optional wrinkles and jaw shading for extra line content.
    if rng.random() < 0.55:
        for _ in range(rng.integers(1, 4)):
            wy = rng.uniform(0.30, 0.36)
            wx = rng.uniform(0.40, 0.52)
            ww = rng.uniform(0.06, 0.16)
            draw.arc(box(wx + ww / 2, wy + 0.02, ww / 2, 0.02), 200, 340,
                     fill=_shade(skin, 0.7), width=lw)
    draw.arc(box(0.5, head_cy, head_rx * 0.98, head_ry * 0.98), 35, 145,
             fill=_shade(skin, 0.8), width=lw)

    im = im.resize((side, side), Image.LANCZOS)
    return np.asarray(im, dtype=np.float32) / 255.0


def build_corpus(out_dir, count, side=128, seed=0):
    """Write ``count`` portraits as PNGs into ``out_dir``; returns the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for i in range(count):
        rng = np.random.default_rng(np.random.SeedSequence([seed, i]))
        img = generate_portrait(side, rng)
        path = out_dir / f"face_{i:04d}.png"
        Image.fromarray((img * 255 + 0.5).astype(np.uint8)).save(path)
        paths.append(path)
    return paths
