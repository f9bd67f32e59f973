#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

# To use a consistent encoding
from codecs import open
from os import path

import circiso

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, "README.md"), encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="circiso",
    version=circiso.__version__,
    description="Type-1 and Type-2 isomorphisms of circulant graphs",
    author=circiso.__author__,
    author_email=circiso.__author_email__,
    url=circiso.__url__,
    packages=find_packages(exclude=["tests"]),
    package_data={"circiso": ["data/*.tsv"]},
    install_requires=[
        "ordered-set>=4.1.0",
        "numpy>=1.21",
    ],
    extras_require={
        "test": [
            "pytest>=7.0",
            "hypothesis>=6.0",
            "networkx>=2.6",
        ],
    },
    entry_points={
        "console_scripts": ["circiso=circiso.__main__:main"],
    },
    long_description=long_description,
    long_description_content_type="text/markdown",
    license=circiso.__license__,
    classifiers=[
        "Development Status :: 3 - Alpha",
        # Indicate who your project is intended for
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        # Pick your license as you wish (should match "license" above)
        "License :: OSI Approved :: MIT License",
        # Specify the Python versions you support here. In particular, ensure
        # that you indicate whether you support Python 2, Python 3 or both.
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.13",
    ],
    keywords="python circulant graph isomorphism adam conjecture combinatorics",
    python_requires=">=3.9",
)
