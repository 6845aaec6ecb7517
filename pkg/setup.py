"""Build shim for the optional Cython kernel extension.

The package is pure Python plus one accelerator module; when Cython or a C
compiler is unavailable the extension is simply skipped and the pure-Python
kernels are used at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("sparseproj._speedups", ["src/sparseproj/_speedups.pyx"],
                   extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
