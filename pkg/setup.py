import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

ext_modules = [
    Extension(
        "homcert._ckernels",
        ["src/homcert/_ckernels.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        language="c++",
        # a failed compile leaves the pure-Python kernels in charge
        optional=True,
    )
]

setup(ext_modules=cythonize(ext_modules, language_level=3))
