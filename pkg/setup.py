from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("sparing._ckernels", ["src/sparing/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python kernels are selected at import when the extension is
    # missing; the package works either way.
    ext_modules = []

setup(ext_modules=ext_modules)
