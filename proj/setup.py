from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "signedhodge._core",
        sorted(glob("src/*.cpp")) + ["bindings/module.cpp"],
        include_dirs=["include", "vendor"],
        cxx_std=20,
        define_macros=[("SGH_VERSION_INFO", '"0.1.0"')],
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
