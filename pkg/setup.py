"""Build script for the compiled force-field kernel.

The extension is optional: set CHEMFORGE_NO_EXT=1 to skip it, in which case
the package falls back to the pure numpy kernel at import time.
"""

import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("CHEMFORGE_NO_EXT") and os.path.exists(
    "src/chemforge/conformer/_ffext.pyx"
):
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        extensions = cythonize(
            [
                Extension(
                    "chemforge.conformer._ffext",
                    sources=["src/chemforge/conformer/_ffext.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )

setup(ext_modules=extensions)
