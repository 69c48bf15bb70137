"""weylcent: centralizers and commutativity certificates in Weyl algebras."""

from .engine.runtime import __version__

__all__ = ["__version__"]
