"""
Setup file for curlhvi.
"""
import os
import os.path
from setuptools import setup

PACKAGES = ['curlhvi',
            'curlhvi.core',
            'curlhvi.mesh',
            'curlhvi.dg',
            'curlhvi.nonsmooth',
            'curlhvi.linalg',
            'curlhvi.solver',
            'curlhvi.analysis',
            'curlhvi.io']


def read(fname):
    "Read the content of fname as string"
    with open(os.path.join(os.path.dirname(__file__), fname)) as infile:
        return infile.read()


def version():
    "Read __version__ without importing the package"
    with open(os.path.join(os.path.dirname(__file__), 'curlhvi', 'core',
                           '__init__.py')) as infile:
        for line in infile:
            if line.startswith('__version__'):
                return line.split('=')[1].strip().strip("'\"")
    return '0.0.0'

setup(
    name="curlhvi",
    version=version(),
    description="Interior penalty DG solver for H(curl)-elliptic "
    "hemivariational inequalities",
    license="BSD",
    keywords="discontinuous Galerkin Maxwell hemivariational inequality",
    packages=PACKAGES,
    long_description=read('README.md'),
    classifiers=["Development Status :: 2 - Pre-Alpha",
                 "Topic :: Scientific/Engineering :: Mathematics",
                 "Topic :: Scientific/Engineering :: Physics",
                 "License :: OSI Approved :: BSD License"],
    platforms='any',
    install_requires=["numpy>=1.11.3",
                      "scipy>=0.18.1",
                      "pandas>=0.19.1",
                      "tabulate"],
    extras_require={
        # CHOLMOD factorization; SuperLU is used without it
        'cholmod': ["scikit-sparse"],
        },
    setup_requires=['nose>=1.3.7', 'coverage'],
    test_suite='nose.collector',
    entry_points={
        'console_scripts': ['curlhvi = curlhvi.main:main'],
        },
    package_data={
        # If any package contains *.md, *.txt or *.rst files, include them:
        'doc': ['*.md', '*.rst'],
        }
    )
