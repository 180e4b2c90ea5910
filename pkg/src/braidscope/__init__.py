"""Braid groups of graphs via discretized configuration complexes."""
from .config_space import (ConfigCell, ConfigComplex, connected_components, count_cells_all_dims,
                           enumerate_complex, euler_characteristic, homology_h1)
from .errors import BraidscopeError, InvalidInput, InvalidParameter, NotConnected
from .graph import (Graph, cycle_rank, essential_vertices, make_cycle, make_path, make_star,
                    make_sun, smooth, subdivide_for)
from .presentation import (PresHom, Presentation, abelian_invariants, apply_hom, free_reduce,
                           fundamental_presentation, spanning_tree)
from .sun_models import FamilySpec, expected_rank, star_generator_index_set, verify_family
from .tietze import certify_free, tietze_simplify
from .van_kampen import Component, GvkInput, gvk_pushout, sun1_symbolic

__version__ = "0.1.0"
