"""Unbiased quantized consensus laboratory: native core plus thin wrappers."""

from ._qcwalk import *  # noqa: F401,F403
from ._qcwalk import __doc__  # noqa: F401
