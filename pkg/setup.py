import numpy
from setuptools import setup, Extension
from Cython.Build import cythonize

ext = Extension(
    "simlts._kernels._speedups",
    sources=["src/simlts/_kernels/_speedups.pyx"],
    include_dirs=[numpy.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    extra_compile_args=["-O3"],
)

setup(ext_modules=cythonize([ext], language_level="3"))
