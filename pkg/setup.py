"""Build hook for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is chosen
at import time); Cython is only needed to build the fast path.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "flagweak._kernel.cyimpl",
                ["src/flagweak/_kernel/cyimpl.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
