"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension; ``braidlink.kernels``
falls back to the NumPy implementations when the compiled module is missing.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "braidlink._kernels",
                ["src/braidlink/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython or NumPy at build time: install pure-Python only.
    pass

setup(ext_modules=ext_modules)
