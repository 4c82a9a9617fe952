"""Build script: compiles the optional exact-linear-algebra speedup module.

The package works without the extension (a pure-Python/numpy fallback is
selected at import time); the extension just makes the hot kernels faster.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "logcurve._speedups",
                ["src/logcurve/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
    for ext in ext_modules:
        ext.optional = True
except ImportError:
    pass

setup(ext_modules=ext_modules)
