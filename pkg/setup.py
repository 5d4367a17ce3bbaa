import os
import sys

from setuptools import setup

# The compiled kernels are optional: pcx falls back to the pure-numpy
# implementation at import time if the extension is absent or fails to build.
ext_modules = []
if os.environ.get("PCX_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        extensions = [
            Extension(
                "pcx._kernels_cy",
                ["src/pcx/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ]
        ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})
    except Exception as exc:  # pragma: no cover - build-env dependent
        sys.stderr.write(f"pcx: skipping compiled kernels ({exc})\n")

setup(ext_modules=ext_modules)
