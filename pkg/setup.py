"""Build script: compiles the optional kernel extension when Cython is around.

The package is pure Python plus one optional compiled module; a failed or
skipped extension build leaves a fully functional install running the pure
kernels.  Set FORDCIRCLES_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FORDCIRCLES_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "fordcircles._kernel._speedups",
                    ["src/fordcircles/_kernel/_speedups.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
