"""Build script for the optional compiled elimination kernel.

The package is fully functional without it (a pure-Python kernel is
selected at import time); building the extension just makes the solver
roughly two orders of magnitude faster.

    python setup.py build_ext --inplace
"""
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("ekdom._kernel._speedups",
                   ["src/ekdom/_kernel/_speedups.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    print("Cython not available; installing with the pure-Python kernel only")

setup(ext_modules=ext_modules)
