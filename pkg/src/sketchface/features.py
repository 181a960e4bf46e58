"""Latent feature containers passed between encoders, generators and fusion."""

from __future__ import annotations

from dataclasses import dataclass, field

import torch

from .config import COMPONENTS


@dataclass
class GeometryFeature:
    """Spatial geometry latent (C, H, W) for one component.

    ``source`` records which encoder produced it ("sketch" or "image"); the
    map lives in the shared sketch/image geometry space either way.
    """

    data: torch.Tensor
    source: str
    component: str

    def __post_init__(self):
        if self.data.dim() != 3:
            raise ValueError(f"geometry feature must be (C,H,W), got {tuple(self.data.shape)}")
        if self.source not in ("sketch", "image"):
            raise ValueError(f"bad source {self.source!r}")
        if self.component not in COMPONENTS:
            raise ValueError(f"unknown component {self.component!r}")
        if not torch.isfinite(self.data).all():
            raise ValueError("geometry feature contains non-finite values")


@dataclass
class AppearanceFeature:
    """Pooled appearance vector (C,) for one component; no spatial axes."""

    data: torch.Tensor
    component: str

    def __post_init__(self):
        if self.data.dim() != 1:
            raise ValueError(f"appearance feature must be (C,), got {tuple(self.data.shape)}")
        if self.component not in COMPONENTS:
            raise ValueError(f"unknown component {self.component!r}")
        if not torch.isfinite(self.data).all():
            raise ValueError("appearance feature contains non-finite values")


@dataclass
class FaceCodes:
    """Per-component geometry + appearance codes for one face."""

    geometry: dict[str, GeometryFeature]
    appearance: dict[str, AppearanceFeature]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in COMPONENTS:
            if name not in self.geometry or name not in self.appearance:
                raise ValueError(f"codes missing component {name!r}")

    def lerp(self, other: "FaceCodes", t_geom: float, t_app: float) -> "FaceCodes":
        """Linear interpolation of both code sets, per component.

        Exact at the endpoints: t == 0 returns this face's tensors unchanged
        and t == 1 the other's, so endpoint renders are bit-identical to the
        corresponding reconstructions.
        """
        geometry = {
            n: GeometryFeature(
                _lerp(self.geometry[n].data, other.geometry[n].data, t_geom),
                source=self.geometry[n].source if t_geom < 1.0 else other.geometry[n].source,
                component=n,
            )
            for n in self.geometry
        }
        appearance = {
            n: AppearanceFeature(
                _lerp(self.appearance[n].data, other.appearance[n].data, t_app),
                component=n,
            )
            for n in self.appearance
        }
        return FaceCodes(geometry, appearance, meta={"lerp": (t_geom, t_app)})


def _lerp(a, b, t):
    if t == 0.0:
        return a
    if t == 1.0:
        return b
    return (1.0 - t) * a + t * b
