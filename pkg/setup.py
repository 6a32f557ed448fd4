"""Build script: compiles the optional wall-scan kernel when Cython is around.

The package is pure Python apart from one small extension module that speeds
up candidate-wall enumeration.  If Cython (or a C compiler) is missing the
build silently falls back to shipping only the Python sources; the package
selects the pure-Python kernel at import time in that case.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/cohsys/_wallscan.pyx",
        compiler_directives={"language_level": "3"},
    )
    for ext in ext_modules:
        ext.extra_compile_args = ["-O3"]
except ImportError:
    pass

setup(ext_modules=ext_modules)
