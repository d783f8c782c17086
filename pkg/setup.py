import os
import warnings

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PARTIALCUBE_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "partialcube._kernels._speedups",
                    ["src/partialcube/_kernels/_speedups.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        warnings.warn("Cython not found; installing with the pure-Python kernels only.")

setup(ext_modules=ext_modules)
