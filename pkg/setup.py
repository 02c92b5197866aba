"""Build hook for the optional compiled kernel.

The package is pure Python plus one Cython extension; when Cython or a
C compiler is missing the build falls back to the pure wheel and the
library selects the numpy kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    import numpy as np
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "artifact._bfs_cy",
                sources=["src/artifact/_bfs_cy.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        annotate=False,
    )

setup(ext_modules=ext_modules)
