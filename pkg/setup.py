"""
Hopf YD Verifier - Setup Configuration
Exact verification of (alpha,beta)-Yetter-Drinfeld structures over finite-dimensional Hopf algebras
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read README for long description
this_directory = Path(__file__).parent
long_description = (this_directory / "docs" / "README.md").read_text(encoding='utf-8')

# Read requirements
def read_requirements(filename):
    with open(filename, 'r', encoding='utf-8') as f:
        return [line.strip() for line in f if line.strip() and not line.startswith('#')]

requirements = read_requirements('requirements.txt')
dev_requirements = read_requirements('requirements-dev.txt')

setup(
    name="hopf-yd-verifier",
    version="1.0.0",
    description="Exact-arithmetic verification of Yetter-Drinfeld modules, crossed products and T-coalgebras",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=['src', 'src.*', 'config']),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Operating System :: OS Independent",
        "Environment :: Console",
    ],
    python_requires=">=3.9",
    install_requires=requirements,
    extras_require={
        "dev": dev_requirements,
        "test": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
            "pytest-mock>=3.11.1",
            "hypothesis>=6.82.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "hopf-yd=src.cli:main",
        ],
    },
    include_package_data=True,
    package_data={
        "": [
            "config/*.yml",
            "data/fixtures/*.json",
        ],
    },
    zip_safe=False,
    keywords=[
        "hopf-algebra",
        "yetter-drinfeld",
        "drinfeld-double",
        "braided-category",
        "exact-arithmetic",
        "verification",
    ],
    platforms=["any"],
    license="MIT",
)
