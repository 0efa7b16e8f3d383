"""Build the compiled Monte Carlo kernel.

The extension is optional at runtime: ougls falls back to a bit-identical
pure-NumPy kernel when the module is missing (see ougls.simulate).
"""

import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

# -ffp-contract=off forbids FMA contraction so the compiled kernel stays
# bit-identical to the NumPy fallback (separate multiply and add).
ext = Extension(
    "ougls._mc_kernel",
    ["src/ougls/_mc_kernel.pyx"],
    include_dirs=[numpy.get_include()],
    extra_compile_args=["-O3", "-ffp-contract=off"],
)

setup(ext_modules=cythonize([ext], language_level="3"))
