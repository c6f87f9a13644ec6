import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - pure install
    cythonize = None

ext_modules = []
if cythonize is not None and os.environ.get("BRUHATPIPES_NO_EXT") != "1":
    ext_modules = cythonize(
        [Extension("bruhatpipes._kernels", ["src/bruhatpipes/_kernels.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
