import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the NumPy
# implementations when the extension is absent.  Set ANISOBEC_PURE=1 to
# skip compilation entirely.
ext_modules = []
if os.environ.get("ANISOBEC_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "anisobec._lattice",
                    ["src/anisobec/_lattice.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
