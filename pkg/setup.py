# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
from setuptools import setup

setup(
    name='fadeloop',
    packages=['fadeloop', 'fadeloop.utils'],
    license='MIT',
    version='0.1.0',
    description="Mean square stabilization of linear plants over power constrained fading channels",
    long_description=open('README.rst', encoding='utf-8').read(),
    author='fadeloop developers',
    install_requires=['numpy==1.26.4',
                      'pint>=0.22',
                      'scipy>=1.5',
                      'pandas>=0.25.2',
                      'flexsolve>=0.5.4',
                      'numba==0.60.0',
                      'pyyaml'],
    extras_require={
        'dev': [
            'sphinx',
            'sphinx_rtd_theme',
            'pytest',
            'pytest-cov',
            'coveralls',
        ]
    },
    package_data={
        'fadeloop': [
            'utils/*',
            'settings.yaml',
            'units_of_measure.txt',
        ]
    },
    entry_points={
        'console_scripts': ['fadeloop=fadeloop.cli:main'],
    },
    python_requires='>=3.9',
    platforms=['Windows', 'Mac', 'Linux'],
    classifiers=['Development Status :: 3 - Alpha',
                 'Environment :: Console',
                 'License :: OSI Approved :: MIT License',
                 'Topic :: Scientific/Engineering',
                 'Topic :: Scientific/Engineering :: Mathematics',
                 'Intended Audience :: Education',
                 'Intended Audience :: Science/Research',
                 'Natural Language :: English',
                 'Operating System :: MacOS',
                 'Operating System :: Microsoft :: Windows',
                 'Operating System :: POSIX :: Linux',
                 'Programming Language :: Python :: 3.9',
                 'Programming Language :: Python :: 3.10',
                 'Programming Language :: Python :: Implementation :: CPython'],
    keywords=['networked control', 'fading channels', 'mean square stability', 'channel capacity', 'monte carlo'],
)
