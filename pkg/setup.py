"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so any failure here downgrades to a source-only install
instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/pvss/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # Cython or a C compiler may be missing
    print(f"pvss: skipping compiled kernels ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
