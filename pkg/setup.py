import os

from setuptools import Extension, setup


def ext_modules():
    if os.environ.get("STAIRS_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("stairs._ckernels", ["src/stairs/_ckernels.pyx"],
                    extra_compile_args=["-O2"])
    return cythonize([ext], language_level=3)


setup(ext_modules=ext_modules())
