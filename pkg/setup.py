import setuptools

NAME = "perm-closure"
VERSION = "0.1.0"
AUTHOR = "perm-closure developers"

with open("README.md", "r") as fh:
    long_description = fh.read()

install_requires = ['click', 'jsonschema', 'PyYAML', "Jinja2"]

setuptools.setup(
    name=NAME,
    version=VERSION,
    author=AUTHOR,
    description="Automata for the commutative closure of shuffle expressions "
        + "over group languages",
    long_description=long_description,
    long_description_content_type="text/markdown",
    package_data={'': ['schemas/*', 'templates/*', 'data/fixtures/*',
                       'data/expressions/*']},
    packages=setuptools.find_packages(exclude=["unittests", "unittests.*"]),
    install_requires=install_requires,
    entry_points='''
        [console_scripts]
        perm-closure=perm_closure.cli:main
    ''',
    classifiers=(
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Natural Language :: English",
        "Topic :: Scientific/Engineering :: Mathematics"
    ),
)
