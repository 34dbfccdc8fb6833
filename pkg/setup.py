"""Build script: compiles the optional search kernel extension.

The package is fully functional without the extension (a pure-Python
kernel with the same interface is selected at import time), so a missing
Cython or C compiler only costs speed, never correctness.
"""

from setuptools import setup

ext_modules = []
try:
    import os

    from Cython.Build import cythonize
    from setuptools import Extension

    if not os.path.exists("src/lcc/_kernel/_speedups.pyx"):
        raise ImportError("no kernel source")
    ext_modules = cythonize(
        [
            Extension(
                "lcc._kernel._speedups",
                ["src/lcc/_kernel/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
