"""Divides on closed oriented surfaces and their open books.

The package is organised bottom up:

* :mod:`divide_forge.surface_map`: rotation systems, faces, genus,
  canonical forms.
* :mod:`divide_forge.divide`: divides (4-valent maps plus free loops),
  strand tracing, checkerboard colorings, admissibility.
* :mod:`divide_forge.invariants`: page and ambient invariants of the open
  book carried by an admissible divide.
* :mod:`divide_forge.fiber`: the fiber surface with its ordered vanishing
  cycles, monodromy words, and homological monodromy.
* :mod:`divide_forge.census`: chain divides, the three genus one families,
  and exhaustive enumeration by ambient genus.
* :mod:`divide_forge.documents` / :mod:`divide_forge.render` /
  :mod:`divide_forge.cli`: the JSON interchange format, DOT and SVG output,
  and the command line front end.
"""

from .errors import (
    BasisMismatch,
    CapExceeded,
    Disconnected,
    DivideForgeError,
    DocumentSyntaxError,
    DuplicateDart,
    FixedDart,
    GenusTooSmall,
    InvariantMismatch,
    NotAdmissible,
    NotBipartite,
    OddCharacteristic,
    ParityMismatch,
    SchemaError,
    UnpairedDart,
)
from .surface_map import (
    HalfEdgeMap,
    are_homeomorphic,
    build_map,
    canonical_form,
    decode_canonical_form,
)
from .divide import (
    AdmissibilityReport,
    Coloring,
    Divide,
    DualGraph,
    checkerboard,
    dual_graph,
    trace_circles,
    validate_admissible,
)
from .invariants import (
    HeegaardData,
    PageInvariants,
    binding_number_bounds,
    heegaard_check,
    page_invariants,
)
from .fiber import (
    FiberComplex,
    MonodromyWord,
    VanishingCycleSet,
    build_fiber,
    homological_monodromy,
    homology_basis,
    intersection_matrix,
    monodromy_word,
    vanishing_cycles,
)
from .census import (
    DEFAULT_MAX_V,
    CensusEntry,
    FAMILY_KINDS,
    GluingKind,
    chain_divide,
    enumerate_divides,
    enumerate_genus_one,
    family,
    ribbon_boundary_profile,
)
from .documents import emit_divide, parse_divide
from .render import emit_dot, emit_svg

__version__ = "0.1.0"
