"""Builds the optional compiled decoder kernel.

The package is fully functional without the extension; whofdm._kernels
falls back to the numpy implementation when the compiled module is
missing (see benchmarks/bench_kernels.py for the speed difference).
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, install pure-Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler / cython: fall back
            print(f"whofdm: skipping compiled kernels ({exc!r})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"whofdm: skipping {ext.name} ({exc!r})")


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "whofdm._kernels._viterbi",
        ["src/whofdm/_kernels/_viterbi.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
