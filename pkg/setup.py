"""Build shim for the optional compiled kernel.

The package is pure Python by default; if Cython and a C compiler are
around we also build pullcalc._speedups, which kernel.py picks up at
import time.  Any build failure just means the fallback gets used, so
errors here are demoted to warnings.
"""

import sys

from setuptools import setup, Extension
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:
            print("warning: compiled kernel skipped (%s)" % exc, file=sys.stderr)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print("warning: %s skipped (%s)" % (ext.name, exc), file=sys.stderr)


extensions = []
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "pullcalc._speedups",
                ["src/pullcalc/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    print("warning: Cython not found, building without the compiled kernel",
          file=sys.stderr)

setup(
    ext_modules=extensions,
    cmdclass={"build_ext": optional_build_ext},
)
