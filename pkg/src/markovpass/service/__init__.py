"""HTTP service wrapper around the core package."""

from .app import create_app
from .registry import ModelRegistry, UnknownModelError

__all__ = ["create_app", "ModelRegistry", "UnknownModelError"]
