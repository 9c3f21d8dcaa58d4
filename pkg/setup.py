from setuptools import find_packages, setup

from monochrome import __author__, __description__, __email__, __version__

setup(
    name="monochrome-components",
    author=__author__,
    author_email=__email__,
    version=__version__,
    description=__description__,
    packages=find_packages(exclude=("tests", "tests.*")),
    install_requires=[
        "sacred>=0.8.0",
        "numpy",
        "scipy",
        "networkx",
        "scikit-learn",
        "h5py",
    ],
    extras_require={"dev": ["pytest", "black"]},
    entry_points={"console_scripts": ["monochrome=monochrome.cli:run"]},
)
