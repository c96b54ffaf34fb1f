"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a numpy-based
fallback is selected at import time), so any failure here degrades to a
pure-Python install instead of aborting.  Set ZETADELTA_NO_EXT=1 to skip
the extension build entirely.
"""

import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"skipping compiled kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping compiled kernel {ext.name}: {exc}")


ext_modules = []
if not os.environ.get("ZETADELTA_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "zetadelta._kernels_cy",
                    ["src/zetadelta/_kernels_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        warnings.warn("Cython not available; installing pure-Python kernels only")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
