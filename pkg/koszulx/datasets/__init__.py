from .arrangements import *
from .fixtures import *
from .points import *
from .random_ideals import *
