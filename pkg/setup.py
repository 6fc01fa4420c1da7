from setuptools import setup, find_packages

with open('README.rst') as f:
    long_description = f.read()

setup(  # noqa: E131
    name='tverbergkit',
    version='0.0.0',
    description='Constructions, exact homology and exact solvers for Tverberg-type problems',
    long_description=long_description,
    packages=find_packages(exclude=['tests']),
    python_requires='>=3.8',
    entry_points='''
[console_scripts]
tverbergkit = tverbergkit.cli:main
''',
    install_requires=[
        # Build

        'click>=6.7',
        'numpy',

        # Tests

        'flake8',
    ],
    extras_require={
        'test': [
            'coveralls',
            'hypothesis',
            'pytest',
            'pytest-cov',
            'sympy>=1.12',
        ],
        'docs': [
            'Sphinx',
            'sphinx-autobuild',
            'sphinx_rtd_theme',
        ],
    },
)
