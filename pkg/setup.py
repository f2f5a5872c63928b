"""Build script: compiles the optional scan kernel extension.

The package works without the extension (a pure-Python fallback is
selected at import time), so any failure to cythonize or compile is
downgraded to a warning.
"""

import warnings

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("gaussquares._scan", ["src/gaussquares/_scan.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    warnings.warn(f"scan kernel extension not built ({exc}); using pure-Python fallback")

setup(ext_modules=ext_modules)
