import os

from setuptools import setup

ext_modules = []
if os.environ.get("BBINTERP_NO_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "bbinterp._core",
                    ["src/bbinterp/_core.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: the package runs on the numpy fallback
        ext_modules = []

setup(ext_modules=ext_modules)
