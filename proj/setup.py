import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include():
    candidates = [
        os.environ.get("EIGEN3_INCLUDE_DIR"),
        "/usr/include/eigen3",
        "/usr/local/include/eigen3",
    ]
    for path in candidates:
        if path and os.path.isdir(path):
            return path
    raise RuntimeError("Eigen headers not found; set EIGEN3_INCLUDE_DIR")


core_sources = [
    "src/graph.cpp",
    "src/schedule.cpp",
    "src/dynamics.cpp",
    "src/walkers.cpp",
    "src/exact.cpp",
    "src/spectral.cpp",
    "src/bounds.cpp",
    "src/time_varying.cpp",
    "src/harness.cpp",
    "src/acceptance.cpp",
]

ext = Pybind11Extension(
    "qcwalk._qcwalk",
    ["bindings/pymodule.cpp"] + core_sources,
    include_dirs=["include", "vendor", eigen_include()],
    cxx_std=20,
)

setup(
    packages=["qcwalk"],
    package_dir={"qcwalk": "python/qcwalk"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
