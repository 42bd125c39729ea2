import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("HVLAB_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("hvlab._kernel_c", ["src/hvlab/_kernel_c.pyx"])],
            language_level="3",
        )

setup(ext_modules=ext_modules)
