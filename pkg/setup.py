"""Build script: compiles the optional verification kernel when Cython and a
C compiler are available; the package falls back to the pure-Python kernel
otherwise, so a failed extension build is not fatal.

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("simplelie._speedups", ["src/simplelie/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
