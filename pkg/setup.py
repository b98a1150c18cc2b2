import os

from setuptools import Extension, setup

# The compiled kernel is optional: install with DRINFACTOR_PURE=1 (or without
# Cython) to get the pure-Python backend only.
ext_modules = []
if os.environ.get("DRINFACTOR_PURE", "") in ("", "0"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("drinfactor._kernel_c", ["src/drinfactor/_kernel_c.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
