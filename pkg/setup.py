"""Optional Cython build for the hammock dimension kernel.

The package works without the extension; mesh.py falls back to the pure
Python implementation when rigidcat._hammock_fast is missing.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/rigidcat/_hammock_fast.pyx"], language_level=3)
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
