from koszulx.algorithms.groebner import *
from koszulx.algorithms.hilbert import *
from koszulx.algorithms.kv import *
from koszulx.algorithms.modules import *
from koszulx.algorithms.resolution import *
from koszulx.algorithms.sym2 import *
