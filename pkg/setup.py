import setuptools


setuptools.setup(
    name='paleyclique',
    version='0.1',
    license='BSD 3-clause',
    packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
    python_requires='>=3.8',
    install_requires=['numpy>=1.17', 'sympy>=1.9'],
    extras_require={
        'tests': ['pytest', 'hypothesis', 'networkx'],
    },
    entry_points={
        'console_scripts': ['paleyclique = paleyclique.cli:main'],
    },
)
