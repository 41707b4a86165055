from .base import *
from .exceptions import *
from .image import *
from .params import *
