from .field import *
from .module import *
from .monomial import *
from .order import *
from .polynomial import *
