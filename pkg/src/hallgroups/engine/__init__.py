from . import kernels
from .constructors import (
    alt, build, cyclic, dihedral, direct_product, gl2, gu2, m11, pgl2,
    point_stabilizer, psl2, psl3, psu3, sl2, sym,
)
from .group import DEFAULT_CAP, CapExceeded, FiniteGroup, Subgroup, closure
