import os
from setuptools import setup, find_packages


if os.path.exists('README.md'):
    long_description = open('README.md').read()
else:
    long_description = '''Constant-time Gaussian bilateral filtering with Gauss-polynomial range kernels.'''



setup(
    name='gausspolyfilter',
    version='1.0.0',
    license='MIT',
    description='Constant-time Gaussian bilateral filtering of grayscale images using Gauss-polynomial range kernels.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords='image-processing bilateral-filter edge-preserving-smoothing recursive-gaussian polynomial-approximation',
    packages=find_packages(exclude=['tests']),
    tests_require=['pytest', 'hypothesis', 'mpmath'],
    include_package_data=True,
    install_requires=[
        'numpy',
        'scipy',
        'opencv-contrib-python',
        'matplotlib'
    ],
    entry_points={
        'console_scripts': [
            'gausspolyfilter=gausspolyfilter.run:main',
        ],
    },
    classifiers=[
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Image Processing',
    ],
)
