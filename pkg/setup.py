from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "arithbilliards.kernels_cy",
                ["src/arithbilliards/kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: install pure-Python only; the kernel dispatch falls back.
    extensions = []

setup(ext_modules=extensions)
