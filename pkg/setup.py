"""Allow developers to run pip install commands."""
from setuptools import setup
setup()
