import re
from pathlib import Path

from setuptools import find_packages, setup


def clean_readme(text: str) -> str:
    # Pattern to match ":emphasize-lines:" followed by digits
    emphasize_lines_pattern = r":emphasize-lines: \d+"
    return re.sub(emphasize_lines_pattern, "", text)


version = "0.1.0"

try:
    readme_path = Path(__file__).parent / "README.rst"
    readme = clean_readme(readme_path.read_text())
except FileNotFoundError:
    readme = ""

dependency_links = []

# Dependencies
install_requires = [
    "Faker",  # random operands for the sample sweeps
    "lark",  # operator and Laurent polynomial parsers
    "sympy",  # exact linear algebra
    "tablib[cli]",  # CSV and markdown reports
]

tests_require = [
    "coverage",  # coverage
    "parametrize",  # testing
    "pytest",  # pytest
    "pytest-cov",  # pytest add-on, coverage
]

extras_require = {
    "all": tests_require,
    "tests": tests_require,
}

setup(
    name="sgl-cocycles",
    version=version,
    description=(
        "Exact central extensions of first-order differential operators "
        "with scalar symbol."
    ),
    long_description=f"{readme}",
    long_description_content_type="text/x-rst",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Environment :: Console",
        "License :: OSI Approved :: MIT License",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Development Status :: 3 - Alpha",
    ],
    keywords=(
        ", ".join(
            [
                "central extension",
                "cocycle",
                "differential operators",
                "lie algebra",
                "sato grassmannian",
                "virasoro",
            ]
        )
    ),
    author="sgl-cocycles developers",
    package_dir={"": "src"},
    packages=find_packages(where="./src"),
    entry_points={
        "console_scripts": ["sgl-cocycles = sgl_cocycles.cli.command:main"]
    },
    license="MIT",
    python_requires=">=3.9",
    install_requires=install_requires,
    extras_require=extras_require,
    tests_require=tests_require,
    dependency_links=dependency_links,
    include_package_data=True,
)
