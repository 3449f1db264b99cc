#!/usr/bin/env python

from setuptools import setup

setup(name='eismock',
      version='0.1.0',
      description='Eisenstein series and the mock modular forms they are shadows of.',
      long_description="""
Eismock computes, at arbitrary precision, the Fourier coefficients of the twisted
Eisenstein series E_k^{psi,rho,t} and of the harmonic Maass forms whose shadows they are.
It checks them numerically: shadow and Laplacian by finite differences, modularity on
sampled Gamma_0(N) elements, and an independent lattice sum.

It also ships exact number-theoretic oracles (class numbers, Hecke's coefficients,
sums of squares) and a command line tool, ``eismock``, emitting JSON or CSV reports.

You can have a look at the [README](README.md) for some example usage.
      """,
      long_description_content_type='text/markdown',
      packages=['eismock', 'eismock.tests'],
      package_data={},
      install_requires = ['mpmath >=1.2.0, <2.0.0', 'numpy', 'sympy >=1.9'],
      entry_points={'console_scripts': ['eismock = eismock.cli:main']},
      license='Apache License 2.0',
    )
