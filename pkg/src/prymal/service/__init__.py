"""HTTP service exposing the verification engine."""

from .app import app, create_app

__all__ = ["app", "create_app"]
