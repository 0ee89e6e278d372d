"""Builds the optional compiled kernel extension.

The package works without it (a NumPy fallback is selected at import time),
so a failed extension build must not break installation.
"""
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler etc.
            print(f"warning: compiled kernels skipped ({exc}); "
                  "bvquad will use the pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "bvquad will use the pure-Python backend")


try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension("bvquad._fastkernels", ["src/bvquad/_fastkernels.pyx"],
                   extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
