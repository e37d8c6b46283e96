"""Finite-field recurrence lab: Bohr deficiency certification, exact Cayley
and hypergraph chromatic numbers, and the coloring/subgroup bridge
constructions over F_p^n."""

__version__ = "0.1.0"

from .fpgroup import (  # noqa: F401
    DualVec,
    FpMatrix,
    FpVec,
    ResourceGuardError,
    Subgroup,
    enum_codim_subgroups,
    gaussian_binomial,
)
from .setops import VecSet  # noqa: F401
from .bohr import DeficiencyReport, bohr_deficiency  # noqa: F401
from .colorings import (  # noqa: F401
    CayleyGraph,
    Graph,
    Hypergraph,
    INFINITE,
    build_cayley,
    chromatic_number_exact,
    hypergraph_chromatic,
)
