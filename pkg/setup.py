import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SUMFREE_SKIP_EXT", "") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "sumfree.discrete._kernel",
                    ["src/sumfree/discrete/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # pure-Python kernel is selected at import when the extension
        # is absent; the package stays fully functional
        ext_modules = []

setup(ext_modules=ext_modules)
