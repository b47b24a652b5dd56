"""Exact certificates for diameter-Ramsey simplices.

The pieces:

* :mod:`.exactgeom` -- squared-distance matrices, exact circumcenters,
  nondegeneracy, the circumradius obstruction, float realization.
* :mod:`.deficits` -- deficit profiles, the decomposition LP, and the
  product-of-regular-simplices embedding a decomposition yields.
* :mod:`.family` -- the counterexample family A_d(s, t, u).
* :mod:`.ramseytoy` -- exhaustive arrow-relation checks on tiny sets.
* :mod:`.cli` -- the ``simplex-ramsey`` command.
"""

from .deficits import (
    DeficitDecomposition,
    DeficitProfile,
    ProductEmbedding,
    admissible_subsets,
    build_embedding,
    criterion_by_pair,
    deficit_profile,
    find_decomposition,
    pairwise_criterion,
    product_sqdist,
    realize_embedding,
    verify_decomposition,
)
from .exactgeom import (
    CircumcenterResult,
    SquaredDistanceMatrix,
    as_rational,
    cf_obstruction,
    circumcenter_barycentric,
    circumcenter_in_hull,
    diameter_sq,
    gram_from_sqdist,
    is_nondegenerate_simplex,
    realize,
    regular_sqdist,
    sqdist_from_points,
)
from .family import (
    FamilyParams,
    FamilyReport,
    Verdict,
    canonical_decomposition,
    counterexample_report,
    family_barycentric_closed_form,
    family_sqdist,
    outside_condition,
    scan,
)
from .ramseytoy import (
    ArrowStatus,
    ArrowVerdict,
    FiniteConfig,
    arrow_check,
    congruent_copies,
    pigeonhole_witness,
    product_config,
    regular_simplex_config,
)

__version__ = "0.1.0"
