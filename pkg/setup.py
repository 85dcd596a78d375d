"""Build the optional Cython kernels.

The pure-Python kernels in ``gaussft._pykernels`` are always installed; if
Cython or a C compiler is missing the extension is skipped and the package
falls back to them at import time.
"""
import os
import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:
    print("Cython not available: building without compiled kernels", file=sys.stderr)
else:
    if not os.environ.get("GAUSSFT_NO_EXT"):
        ext_modules = cythonize(
            [
                Extension(
                    "gaussft._ckernels",
                    ["src/gaussft/_ckernels.pyx"],
                    extra_compile_args=["-O2", "-ffp-contract=off"],
                    libraries=["m"] if os.name == "posix" else [],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
