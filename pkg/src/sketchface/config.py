"""Run configuration: layout, network widths, loss weights, optimizer settings.

Everything needed to reproduce a run lives in one RunConfig that round-trips
through a YAML file (``--config`` on the command line).
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import yaml

COMPONENTS = ("background", "left-eye", "right-eye", "nose", "mouth")
# Paste order onto the background canvas; later components overwrite overlaps.
FUSION_ORDER = ("mouth", "nose", "left-eye", "right-eye")

# Component windows as fractions (x, y, w, h) of the canvas side. Fixed
# fractional windows assume aligned portraits and keep the pipeline
# landmark-free; background is always the full canvas.
DEFAULT_WINDOW_FRACTIONS = {
    "left-eye": (0.21, 0.30, 0.25, 0.25),
    "right-eye": (0.54, 0.30, 0.25, 0.25),
    "nose": (0.375, 0.46, 0.25, 0.31),
    "mouth": (0.33, 0.69, 0.34, 0.21),
}

TRAIN_FRACTION_DEFAULT = 29900 / 32200  # published train/test ratio


class ConfigError(ValueError):
    """Bad configuration (out-of-bounds window, unknown key, ...)."""


@dataclass(frozen=True)
class ComponentLayout:
    """Pixel windows (x, y, w, h) for each named component on a square canvas."""

    resolution: int
    windows: dict[str, tuple[int, int, int, int]]

    def __post_init__(self):
        for name in COMPONENTS:
            if name not in self.windows:
                raise ConfigError(f"layout is missing component {name!r}")
        bg = self.windows["background"]
        if bg != (0, 0, self.resolution, self.resolution):
            raise ConfigError("background window must cover the full canvas")
        for name, (x, y, w, h) in self.windows.items():
            if w <= 0 or h <= 0:
                raise ConfigError(f"{name}: empty window {(x, y, w, h)}")
            if x < 0 or y < 0 or x + w > self.resolution or y + h > self.resolution:
                raise ConfigError(f"{name}: window {(x, y, w, h)} outside canvas")

    @classmethod
    def default(cls, resolution, snap=8, fractions=None):
        """Scale the fractional windows to ``resolution``.

        Window sizes are snapped to multiples of ``snap`` (the geometry
        latent downsample factor) so every crop maps to a whole latent grid.
        """
        fractions = fractions or DEFAULT_WINDOW_FRACTIONS
        windows = {"background": (0, 0, resolution, resolution)}
        for name, (fx, fy, fw, fh) in fractions.items():
            w = max(snap, int(round(fw * resolution / snap)) * snap)
            h = max(snap, int(round(fh * resolution / snap)) * snap)
            x = min(max(int(round(fx * resolution)), 0), resolution - w)
            y = min(max(int(round(fy * resolution)), 0), resolution - h)
            windows[name] = (x, y, w, h)
        return cls(resolution=resolution, windows=windows)

    def window(self, name):
        try:
            return self.windows[name]
        except KeyError:
            raise ConfigError(f"unknown component {name!r}") from None


@dataclass(frozen=True)
class LossWeights:
    """Published objective weights: alpha (recon terms), tau (swap), gamma (GAN)."""

    alpha: tuple[float, float, float] = (1.0, 10.0, 10.0)
    tau: tuple[float, float] = (1.0, 1.0)
    gamma: tuple[float, float, float, float, float] = (0.5, 0.5, 0.33, 0.33, 0.33)


@dataclass(frozen=True)
class SketchParams:
    """Extended difference-of-Gaussians sketch extraction parameters.

    ``sigma`` is specified at ``base_resolution`` and scaled linearly with the
    input side, floored at ``min_sigma`` px (below ~0.2 px the discrete DoG
    response vanishes and sketches come out empty).
    """

    sigma: float = 0.8
    k: float = 1.6
    phi: float = 200.0
    eps: float = 0.1
    base_resolution: int = 512
    min_sigma: float = 0.35
    softness: float = 10.0
    binarize: float = 0.5
    min_resolution: int = 64
    thin: bool = True


@dataclass(frozen=True)
class NetSpec:
    """Channel schedule for every sub-network at one deployment scale.

    ``downsample_factor`` fixes the geometry latent grid (crop / factor). The
    decoder and generator realize it with four upsampling blocks whose scales
    multiply to the factor (2,2,2,1 at factor 8; 2,2,2,2 at factor 16). The
    penultimate generator embedding is always 64 channels.
    """

    downsample_factor: int = 8
    enc_base: int = 16
    c_g: int = 64
    c_a: int = 64
    gen_up_channels: tuple[int, ...] = (32, 24, 16)
    embedding_channels: int = 64
    dec_up_channels: tuple[int, ...] = (32, 16, 16)
    disc_base: int = 16
    disc_scales: int = 2
    disc_layers: int = 3
    gf_base: int = 16
    gf_res_blocks: int = 6
    adain_eps: float = 1e-5
    perceptual: str = "random"  # "random" (fixed seed) or "vgg19" (needs weights)

    @classmethod
    def desk(cls):
        """Workstation scale: quartered channels, two discriminator scales."""
        return cls()

    @classmethod
    def full(cls):
        """Publication scale (512 canvas): 4x the desk widths, K=3 scales."""
        return cls(
            enc_base=64,
            c_g=256,
            c_a=256,
            gen_up_channels=(128, 96, 64),
            dec_up_channels=(128, 64, 64),
            disc_base=64,
            disc_scales=3,
            gf_base=64,
            perceptual="vgg19",
        )

    def up_scales(self):
        """Per-block spatial scales for the 4 upsampling blocks."""
        scales = []
        remaining = self.downsample_factor
        for _ in range(4):
            s = 2 if remaining > 1 else 1
            scales.append(s)
            remaining //= s
        if remaining != 1:
            raise ConfigError(
                f"downsample_factor {self.downsample_factor} not reachable "
                "with four x2/x1 upsampling blocks"
            )
        return tuple(reversed(scales))


@dataclass
class RunConfig:
    """Everything one run needs; defaults are the desk-scale toy setup."""

    resolution: int = 128
    seed: int = 0
    net: NetSpec = field(default_factory=NetSpec.desk)
    weights: LossWeights = field(default_factory=LossWeights)
    sketch: SketchParams = field(default_factory=SketchParams)
    split_fraction: float = TRAIN_FRACTION_DEFAULT
    lr: float = 2e-4
    betas: tuple[float, float] = (0.5, 0.99)
    batch_size: int = 2
    ae_iters: int = 2000
    align_iters: int = 2000
    ld_iters: int = 5000
    gf_iters: int = 5000
    log_every: int = 10
    snapshot_every: int = 500
    window_fractions: dict = field(
        default_factory=lambda: dict(DEFAULT_WINDOW_FRACTIONS)
    )

    def layout(self):
        return ComponentLayout.default(
            self.resolution,
            snap=self.net.downsample_factor,
            fractions={k: tuple(v) for k, v in self.window_fractions.items()},
        )

    def to_yaml(self, path):
        with open(path, "w") as f:
            yaml.safe_dump(_to_plain(dataclasses.asdict(self)), f, sort_keys=True)

    @classmethod
    def from_yaml(cls, path):
        with open(path) as f:
            raw = yaml.safe_load(f) or {}
        return cls.from_dict(raw)

    @classmethod
    def from_dict(cls, raw):
        known = {f.name: f for f in dataclasses.fields(cls)}
        unknown = set(raw) - set(known)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        kwargs = {}
        for key, value in raw.items():
            if key == "net":
                kwargs[key] = NetSpec(**_tuplify(value, NetSpec))
            elif key == "weights":
                kwargs[key] = LossWeights(**_tuplify(value, LossWeights))
            elif key == "sketch":
                kwargs[key] = SketchParams(**value)
            elif key == "betas":
                kwargs[key] = tuple(value)
            else:
                kwargs[key] = value
        return cls(**kwargs)


def _tuplify(raw, cls):
    """YAML lists back to tuples where the dataclass field is a tuple."""
    out = {}
    for f in dataclasses.fields(cls):
        if f.name in raw:
            v = raw[f.name]
            out[f.name] = tuple(v) if isinstance(v, list) else v
    unknown = set(raw) - {f.name for f in dataclasses.fields(cls)}
    if unknown:
        raise ConfigError(f"unknown {cls.__name__} keys: {sorted(unknown)}")
    return out


def _to_plain(obj):
    if isinstance(obj, dict):
        return {k: _to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_plain(v) for v in obj]
    return obj
