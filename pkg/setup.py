from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    ext = Extension(
        "antiauto._speedups",
        sources=["src/antiauto/_speedups.pyx"],
        extra_compile_args=["-O3"],
    )
    # Build failures fall back to the pure-Python kernels at import time.
    ext.optional = True
    extensions = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=extensions)
