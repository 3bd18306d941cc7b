"""Build script: compiles the optional polynomial-arithmetic kernel.

The package is pure Python by default; the Cython extension is a drop-in
replacement for the hot inner loops (sparse polynomial add/mul and 2x2
matrix products).  If no compiler is available the build falls back to the
pure install and everything still works.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "plumbtrace._poly_c",
                ["src/plumbtrace/_poly_c.pyx"],
                extra_compile_args=["-O2"],
                language="c",
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on build host
    print(f"plumbtrace: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
