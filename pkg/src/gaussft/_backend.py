"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy twins
take over. ``set_backend`` switches explicitly (tests and the benchmark run
both).
"""
import logging

from gaussft import _pykernels

log = logging.getLogger(__name__)

try:
    from gaussft import _ckernels
except ImportError:  # extension not built
    _ckernels = None
    log.debug("compiled kernels unavailable, using the numpy fallback")

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

kernels = _ckernels if _ckernels is not None else _pykernels


def available_backends():
    return sorted(_BACKENDS)


def get_backend():
    return kernels.NAME


def set_backend(name):
    """Select ``"compiled"`` or ``"python"`` kernels; returns the previous name."""
    global kernels
    try:
        new = _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown or unavailable backend {name!r}; have {available_backends()}"
        ) from None
    previous = kernels.NAME
    kernels = new
    return previous
