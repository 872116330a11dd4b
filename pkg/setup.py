from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "powersum._kernels.cykernels",
        sources=["src/powersum/_kernels/cykernels.pyx"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
