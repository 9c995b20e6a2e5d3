from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "la2._la2",
    sources=[
        "src/quad_int.cpp",
        "src/pell.cpp",
        "src/equation.cpp",
        "src/counting.cpp",
        "src/oracle.cpp",
        "python/la2_module.cpp",
    ],
    include_dirs=["include"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
