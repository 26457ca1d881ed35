"""Build script: compiles the arithmetic kernels when Cython is available.

The package works without the extension (the pure-Python kernels in
``wreathdunkl._kernels_py`` are selected at import); set
``WREATHDUNKL_NO_EXT=1`` to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("WREATHDUNKL_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/wreathdunkl/_kernels_cy.pyx"], language_level=3
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
