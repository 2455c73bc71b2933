#!/usr/bin/env python

"""
Setup script for roadgen.
"""

from pathlib import Path
from setuptools import setup, find_packages

# Get the long description from the README file
here = Path(__file__).parent.absolute()
with (here / 'README.md').open(encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='roadgen',
    version='0.1.0',
    description='Logical road network descriptions to OpenDRIVE',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['test*']),
    package_data={'roadgen': ['data/*.ini', 'data/*.xsd',
                              'data/examples/*.xml']},
    classifiers=[
        'License :: OSI Approved :: Apache Software License',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'Environment :: Console',
        'Development Status :: 3 - Alpha',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering'],

    python_requires='>=3.8',
    install_requires=['numpy', 'ujson', 'lxml', 'svgwrite'],
    extras_require={
        'develop': [
            'pytest', 'coverage', 'scipy', 'tox', 'sphinx',
            'sphinx_rtd_theme', 'flake8'],
    },
    entry_points={
        'console_scripts': ['roadgen=roadgen.cli:main'],
    },
)
