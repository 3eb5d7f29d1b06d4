# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Real algebraic surfaces with many nodes from line arrangements."""

import os

from setuptools import find_packages, setup

readme = open('README.rst').read()
history = open('CHANGES.rst').read()

tests_require = [
    'check-manifest>=0.25',
    'coverage>=4.0',
    'hypothesis>=6.0.0',
    'isort>=4.3.4',
    'pydocstyle>=1.0.0',
    'pytest-cov>=1.8.0',
    'pytest-mock>=1.6.0',
    'pytest>=3.6.0',
]

extras_require = {
    'docs': [
        'Sphinx>=1.4.2',
        'sphinx-click>=2.0',
    ],
    'tests': tests_require,
}

extras_require['all'] = []
for reqs in extras_require.values():
    extras_require['all'].extend(reqs)

setup_requires = [
    'pytest-runner>=2.6.2',
]

install_requires = [
    'blinker>=1.4',
    'click>=7.0',
    'Flask>=1.0.0',
    'jsonschema>=2.6.0',
    'numpy>=1.20.0',
    'PyMCubes>=0.1.2',
    'scipy>=1.6.0',
    'werkzeug>=0.15.0',
]

packages = find_packages(exclude=['tests', 'examples', 'examples.*'])


# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join('nodal_surfaces', 'version.py'), 'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

setup(
    name='nodal-surfaces',
    version=version,
    description=__doc__,
    long_description=readme + '\n\n' + history,
    keywords='algebraic surfaces nodes line arrangements chebyshev',
    license='MIT',
    author='Nodal-Surfaces contributors',
    packages=packages,
    zip_safe=False,
    include_package_data=True,
    platforms='any',
    python_requires='>=3.7',
    entry_points={
        'console_scripts': [
            'nodal-surfaces = nodal_surfaces.cli:cli',
        ],
    },
    extras_require=extras_require,
    install_requires=install_requires,
    setup_requires=setup_requires,
    tests_require=tests_require,
    classifiers=[
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Development Status :: 3 - Alpha',
    ],
)
