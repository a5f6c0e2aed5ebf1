from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "spingeo._spingeo",
    sources=[
        "src/bindings.cpp",
        "src/hypercomplex.cpp",
        "src/pauli.cpp",
        "src/geometry.cpp",
        "src/subalgebra.cpp",
        "src/liealg.cpp",
        "src/emit.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
