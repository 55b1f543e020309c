"""Exact multiplicity Tutte polynomials of lists in finitely generated abelian groups."""

from .dm import HilbertSeries, dm_decomposition_check, dm_dimension, dm_hilbert_series
from .exceptions import DimensionMismatchError, PreconditionError
from .graphs import LabeledGraph, forest_count, graph_m_tutte, graph_to_vectors, spanning_tree_count
from .lattice import (
    FgGroup,
    GroupElement,
    SmithDecomposition,
    hermite_normal_form,
    multiplicity,
    quotient_by,
    rank,
    saturation,
    smith_normal_form,
)
from .polynomial import BivariatePolynomial, UnivariatePolynomial
from .roots import RootSystemSpec, positive_roots, root_system, weyl_check
from .toric import (
    Layer,
    LayerPoset,
    characteristic_polynomial,
    compact_regions,
    enumerate_layers,
    euler_characteristic,
    mobius,
    poincare_polynomial,
    sublist_at_layer,
)
from .tutte import (
    ActivityRecord,
    CharacterList,
    activities,
    direct_sum,
    evaluate,
    hyperplane_char_poly,
    m_tutte_expansion,
    m_tutte_recursive,
    nbc_count,
    ordinary_tutte,
)
from .zonotope import (
    FacetSystem,
    ZonotopeStratification,
    facet_system,
    h_interior_counts,
    lattice_points,
    stratification,
    volume,
)

__all__ = [
    "ActivityRecord",
    "BivariatePolynomial",
    "CharacterList",
    "DimensionMismatchError",
    "FacetSystem",
    "FgGroup",
    "GroupElement",
    "HilbertSeries",
    "LabeledGraph",
    "Layer",
    "LayerPoset",
    "PreconditionError",
    "RootSystemSpec",
    "SmithDecomposition",
    "UnivariatePolynomial",
    "ZonotopeStratification",
    "activities",
    "characteristic_polynomial",
    "compact_regions",
    "direct_sum",
    "dm_decomposition_check",
    "dm_dimension",
    "dm_hilbert_series",
    "enumerate_layers",
    "euler_characteristic",
    "evaluate",
    "facet_system",
    "forest_count",
    "graph_m_tutte",
    "graph_to_vectors",
    "h_interior_counts",
    "hermite_normal_form",
    "hyperplane_char_poly",
    "lattice_points",
    "m_tutte_expansion",
    "m_tutte_recursive",
    "mobius",
    "multiplicity",
    "nbc_count",
    "ordinary_tutte",
    "poincare_polynomial",
    "positive_roots",
    "quotient_by",
    "rank",
    "root_system",
    "saturation",
    "smith_normal_form",
    "spanning_tree_count",
    "stratification",
    "sublist_at_layer",
    "volume",
    "weyl_check",
]
