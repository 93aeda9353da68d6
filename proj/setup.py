"""CMake-backed build of the fogcolonies extension module."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            "-S",
            str(Path(__file__).parent.resolve()),
            "-B",
            str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DFOG_BUILD_PYTHON=ON",
            "-DFOG_BUILD_TESTS=OFF",
            f"-DFOG_PYTHON_OUTPUT_DIR={extdir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        try:
            import pybind11

            configure.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass

        subprocess.run(configure, check=True)
        subprocess.run(
            [
                "cmake",
                "--build",
                str(build_dir),
                "--target",
                "fogcolonies_core",
                "--parallel",
                str(os.cpu_count() or 2),
            ],
            check=True,
        )


setup(
    packages=["fogcolonies"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("fogcolonies._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
