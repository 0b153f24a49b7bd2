"""Colored fans for SL(2) x G_m with one color, and the 3D house-model fans."""
from .colored import *  # noqa: F401,F403
from .colored import __all__ as _colored_all
from .threefold import *  # noqa: F401,F403
from .threefold import __all__ as _threefold_all

__all__ = _colored_all + _threefold_all
