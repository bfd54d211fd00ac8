"""HTTP service exposing the toolkit as stateless endpoints.

Every operation in the core package is a pure function over immutable values,
so the service needs no locks, sessions, or shared state; any number of
clients may hit it concurrently.
"""

from .app import app, create_app

__all__ = ["app", "create_app"]
