#!/usr/bin/env python3

# std
from pathlib import Path

from setuptools import find_packages, setup

keywords = [
    "coding-theory",
    "kerdock",
    "bch",
    "association-scheme",
    "t-design",
    "macwilliams",
    "reproducibility",
]

description = (
    "Build Kerdock codes, BCH codes and their duals and check their "
    "structure, designs, association schemes and i-components."
)

this_dir = Path(__file__).resolve().parent

packages = find_packages()

with (this_dir / "README.rst").open() as fh:
    long_description = fh.read()

with (this_dir / "kerdocklab" / "version.txt").open() as vf:
    version = vf.read().strip()

with (this_dir / "requirements.txt").open() as rf:
    pinned_requires = [
        req.strip()
        for req in rf.readlines()
        if req.strip() and not req.startswith("#")
    ]

install_requires = [
    "numpy",
    "scipy",
    "pandas",
    "sympy",
    "gitpython",
    "colorlog",
    "tqdm",
]

extras_require = {
    "dev": [
        "pytest>=4.4.0",
        "pytest-subtests",
        "pytest-cov",
        "twine",
        "pre-commit",
        "sphinx",
        "sphinx-rtd-theme",
    ]
}

missing = sorted(set(install_requires) - set(pinned_requires))
if missing:
    raise ValueError(
        "The requirements given in setup.py don't match these given in"
        " requirements.txt. Please check that you applied you changes to "
        "both files.\n"
        "requirements.txt misses the following dependencies: {}".format(
            ", ".join(missing)
        )
    )

setup(
    name="kerdocklab",
    version=version,
    packages=packages,
    install_requires=install_requires,
    extras_require=extras_require,
    entry_points={"console_scripts": ["kerdocklab=kerdocklab.cli:main"]},
    package_data={"kerdocklab": ["version.txt"]},
    python_requires=">=3.8",
    license="MIT",
    keywords=keywords,
    description=description,
    long_description=long_description,
    long_description_content_type="text/x-rst",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
