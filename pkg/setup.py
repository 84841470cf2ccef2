"""Build script: compiles the optional scan-kernel extension.

The package works without the extension (a numpy/pure-Python fallback is
selected at import time), so the extension is marked optional and a failed
compile only degrades performance.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "torsionfree._kernels._fast",
        ["src/torsionfree/_kernels/_fast.pyx"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
except ImportError:
    pass

setup(ext_modules=ext_modules)
