import sys

from setuptools import Extension, setup

# The compiled kernels are an optional speedup: if Cython (or a C compiler)
# is unavailable the package falls back to openpack._kernels_py at import.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "openpack._kernels",
                ["src/openpack/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    print("Cython not found; building without the compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
