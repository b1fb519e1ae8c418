import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("DOTPHONON_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "dotphonon._fastkern",
                    ["src/dotphonon/_fastkern.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("Cython not available; building without the compiled kernel "
              "(the pure-Python fallback will be used at runtime).")

setup(ext_modules=extensions)
