"""Build hook for the optional compiled census kernel.

The package is fully functional without the extension (a pure Python twin
is selected at import); when Cython and a C compiler are available the
kernel is compiled for a large speedup on the n >= 7 sweeps. Set
QUADRICS_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("QUADRICS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "quadrics._kernel",
                    ["src/quadrics/_kernel.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
