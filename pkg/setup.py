import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("DETOURS_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("detours._speedups", ["src/detours/_speedups.pyx"])],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        # No Cython available: install the pure-Python fallback only.
        ext_modules = []

setup(ext_modules=ext_modules)
