"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
backend is selected at import time), so any failure here downgrades to
a source-only install instead of aborting.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, otherwise install pure-Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or Cython missing
            print(f"hyptri: skipping compiled kernels ({exc}); "
                  "falling back to the pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"hyptri: could not compile {ext.name} ({exc}); "
                  "falling back to the pure-Python backend")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    # -ffp-contract=off keeps the compiled kernels bit-compatible with the
    # pure backend (no fused multiply-add contraction).
    ext = Extension(
        "hyptri._kernels._fast",
        ["src/hyptri/_kernels/_fast.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
