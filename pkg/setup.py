"""Build script for the compiled kernel extension.

The package is fully functional without the extension (a pure-Python
kernel backend is selected at import time), so a missing Cython or C
compiler only costs speed, not features.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    # -ffp-contract=off: the pure-Python backend must stay bitwise
    # identical to the compiled one, so FMA contraction is disabled.
    ext_modules = cythonize(
        [
            Extension(
                "fscil.kernels._ckern",
                ["src/fscil/kernels/_ckern.pyx"],
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
