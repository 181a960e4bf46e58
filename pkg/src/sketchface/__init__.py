"""Face generation and editing with disentangled geometry and appearance.

Faces are decomposed into five components (left-eye, right-eye, nose, mouth,
background). Each component gets its own disentanglement module: a sketch
autoencoder that defines a geometry latent space, an image encoder aligned
into that space, an appearance encoder (global average pooling) and an
AdaIN-driven synthesis generator. A global fusion network assembles the
per-component feature maps into a full face.
"""

__version__ = "0.1.0"

from .config import ComponentLayout, LossWeights, NetSpec, RunConfig
from .features import AppearanceFeature, FaceCodes, GeometryFeature

__all__ = [
    "AppearanceFeature",
    "ComponentLayout",
    "FaceCodes",
    "GeometryFeature",
    "LossWeights",
    "NetSpec",
    "RunConfig",
    "__version__",
]
