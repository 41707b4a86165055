import numpy as np
import pytest

from gausspolyfilter.models.image import Image, peppers_like
from gausspolyfilter.pgm import write_pgm


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def random_image():
    """32x32 uniform noise over [0, 255]"""
    rng = np.random.default_rng(0)
    return Image(rng.uniform(0, 255, size=(32, 32)))


@pytest.fixture
def normal_image():
    """32x32 noise concentrated around mid-gray, integer valued"""
    rng = np.random.default_rng(7)
    return Image(np.clip(np.round(rng.normal(128, 30, size=(32, 32))), 0, 255))


@pytest.fixture(scope='session')
def peppers():
    return peppers_like()


@pytest.fixture(scope='session')
def natural_image():
    return peppers_like(128, seed=3)


@pytest.fixture
def pgm_file(tmp_path):
    """Writes an image to a PGM file under tmp_path and returns its path"""
    def write(img, name='img.pgm'):
        path = tmp_path / name
        path.write_bytes(write_pgm(img))
        return str(path)
    return write
