"""Build script: compiles the optional word-kernel extension.

The package works without it (a pure-Python kernel is selected at
import when the extension is absent), so a missing compiler only costs
speed, not correctness.
"""
from setuptools import setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/coxkit/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
