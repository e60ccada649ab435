"""Build script for the optional compiled kernel.

The package is fully functional without the extension; homcert.kernels
falls back to the pure-Python implementation when the import fails.
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
                "homcert._kernels",
                ["src/homcert/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
