from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    longDescription = fh.read()

setup(
    name="orbivol",
    version="0.1.0",
    author="Marcos Junior Hernández-Moreno",
    author_email="iam.marcoshernandez@gmail.com",
    description="Cotas explícitas de volumen para orbifolds hiperbólicos en Python.",
    long_description=longDescription,
    long_description_content_type="text/markdown",

    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={
        "orbivol": ["esquemas/*.json"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3 :: Only",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
    ],

    keywords=[
        "hyperbolic-geometry",
        "orbifolds",
        "lorentz-group",
        "volume-bounds",
        "hurwitz",
        "numerical-verification",
    ],

    install_requires=[
        "numpy",
        "sympy",
        "scipy",
        "click",
        "rich"
    ],

    extras_require={
        "test": [
            "pytest",
            "hypothesis",
            "jsonschema",
            "mpmath",
        ],
    },

    entry_points={
        "console_scripts": [
            "orbivol=orbivol.cli:orbivol",
        ],
    },

    python_requires=">=3.8"
)
