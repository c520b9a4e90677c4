#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""citation_fit_step
A SEAMM plug-in for fitting heavy-tailed models to citation counts
"""
import sys
from setuptools import setup, find_packages


# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

with open('requirements.txt') as fd:
    requirements = fd.read()

setup(
    name='citation_fit_step',
    author="Paul Saxe",
    author_email='psaxe@molssi.org',
    description=__doc__.splitlines()[1],
    long_description=readme + '\n\n' + history,
    long_description_content_type='text/x-rst',
    version='2024.10.1',
    license="BSD-3-Clause",
    url='https://github.com/molssi-seamm/citation_fit_step',

    packages=find_packages(include=['citation_fit_step']),

    # The ini file and the bibliography in citation_fit_step/data
    include_package_data=True,
    package_data={'citation_fit_step': ['data/*']},

    # Allows `setup.py test` to work correctly with pytest
    setup_requires=[] + pytest_runner,

    # Required packages, pulls from pip if needed; do not use for Conda
    # deployment
    install_requires=requirements,

    test_suite='tests',

    # Valid platforms your code works on, adjust to your flavor
    platforms=['Linux',
               'Mac OS-X',
               'Unix',
               'Windows'],

    zip_safe=False,

    keywords=['SEAMM', 'SEAMMplugin', 'flowchart', 'bibliometrics'],
    classifiers=[
        'Environment :: Plugins',
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Information Analysis',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
    entry_points={
        'console_scripts': [
            'citation-fit=citation_fit_step.__main__:run',
        ],
        'org.molssi.seamm': [
            'Citation Fit = citation_fit_step:CitationFitStep',
        ],
        'org.molssi.seamm.tk': [
            'Citation Fit = citation_fit_step:CitationFitStep',
        ],
        'org.molssi.seamm.citation_fit': [
            'Compare = citation_fit_step:CompareStep',
            'Fit = citation_fit_step:FitStep',
        ],
        'org.molssi.seamm.citation_fit.tk': [
            'Compare = citation_fit_step:CompareStep',
            'Fit = citation_fit_step:FitStep',
        ],
    },
)
