import re

from setuptools import setup

with open('trivext/__init__.py') as f:
    version = re.search("__version__ = '(.*?)'", f.read()).group(1)

setup(
    name='trivext',
    version=version,
    install_requires=[
        'numpy',
        'scipy',
        'sympy'
    ],
    entry_points={
        'console_scripts': ['trivext = trivext.cli:main']
    }
)
