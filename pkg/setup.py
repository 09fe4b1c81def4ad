from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name='majindex',
    version='1.0.0',
    description='Exact major index generating functions, cumulants and limit laws for standard Young tableaux',
    long_description=long_description,
    long_description_content_type='text/markdown',
    author='Lavanya Garg',
    author_email='lgarg_be23@thapar.edu',
    url='https://github.com/lavanya-garg/majindex',
    packages=find_packages(exclude=['golden']),
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Operating System :: OS Independent',
    ],
    python_requires='>=3.8',
    install_requires=[
        'pandas>=1.0.0',
        'numpy>=1.18.0',
        'mpmath>=1.1.0',
        'python-dotenv>=0.19.0',
    ],
    entry_points={
        'console_scripts': [
            'majindex-cli=majindex.cli:main',
        ],
    },
    keywords='young-tableaux major-index q-analog fake-degrees cumulants combinatorics',
    project_urls={
        'Bug Reports': 'https://github.com/lavanya-garg/majindex/issues',
        'Source Code': 'https://github.com/lavanya-garg/majindex',
    },
    include_package_data=True,
    zip_safe=False,
)
