"""Build script for the compiled kernel extension.

The package works without the extension (a numpy fallback is selected at
import time); building it just makes the inner loops faster.
"""

import sys

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:
    ext_modules = []
else:
    # -ffp-contract=off keeps the compiler from fusing multiply-adds, so the
    # compiled kernels stay bit-identical to the numpy fallback.
    extra_args = [] if sys.platform.startswith("win") else ["-O2", "-ffp-contract=off"]
    ext_modules = cythonize(
        [
            Extension(
                "latticelight._kernels._core",
                ["src/latticelight/_kernels/_core.pyx"],
                extra_compile_args=extra_args,
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
