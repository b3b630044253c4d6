import numpy
from setuptools import Extension, setup
from Cython.Build import cythonize

# The compiled kernels are optional: if the build fails (no compiler), the
# package falls back to the pure-numpy implementations at import time.
extensions = [
    Extension(
        "diffractlab.kernels._fast",
        ["src/diffractlab/kernels/_fast.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
