from setuptools import Extension, setup

# The Cython kernel is optional: without it the package falls back to the
# numpy engine at import time, with identical results.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("tern2jw.engine._kernel", ["src/tern2jw/engine/_kernel.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
