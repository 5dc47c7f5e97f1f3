import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "geocover._geocover",
    sorted(glob.glob("src/*.cpp")) + ["python/bindings.cpp"],
    include_dirs=["include", "vendor"],
    libraries=["gmp", "gmpxx"],
    cxx_std=20,
)

setup(
    packages=["geocover"],
    package_dir={"geocover": "python/geocover"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
