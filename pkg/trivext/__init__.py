__version__ = '0.1.0'

from trivext.field import Field, asfield

from trivext.linalg import (
    matrix,
    asmatrix,
    zeros,
    eye,
    rref,
    rank,
    kernel_basis,
    left_kernel_basis,
    determinant,
    inverse,
    matrix_power
)

from trivext.polynomial import (
    IntPolynomial,
    char_poly,
    squarefree_part,
    cyclotomic_periodicity
)

from trivext.core import (
    AlgebraError,
    Quiver,
    BasisElement,
    BasedAlgebra,
    CyDim,
    parse_quiver,
    validate_algebra,
    is_connected
)

from trivext.algebra import (
    path_algebra,
    incidence_algebra,
    semisimple_algebra,
    trivial_extension,
    tensor_product,
    tensor_power,
    opposite,
    enveloping,
    cartan_matrix,
    repetitive_cartan,
    symmetrizing_form
)

from trivext.options import OrbitOptions

from trivext.module import (
    ModuleError,
    RightModule,
    CoverData,
    IsoResult,
    simple_module,
    projective_module,
    projective_cover,
    syzygy,
    projective_dimension,
    global_dimension,
    hom_basis,
    modules_isomorphic
)

from trivext.periodicity import (
    GuardError,
    PeriodicityVerdict,
    Periodic,
    Diverging,
    Inconclusive,
    Vanishing,
    syzygy_orbit,
    regular_bimodule,
    bimodule_syzygy_orbit
)

from trivext.coxeter import (
    SingularCartanError,
    CoxeterData,
    coxeter_matrix,
    coxeter_polynomial,
    coxeter_periodicity,
    coxeter_data
)

from trivext.poset import (
    PosetError,
    Poset,
    parse_poset,
    format_poset,
    order_ideals,
    is_distributive_lattice,
    join_irreducibles,
    relabel,
    named_poset
)

from trivext.enumerate import (
    CanonicalForm,
    canonical_form,
    canonical_labeling,
    enumerate_posets,
    census_distributive_lattices
)

from trivext.dynkin import (
    DynkinType,
    coxeter_number,
    cydim_dynkin,
    tensor_cydim,
    minimal_period_trivext,
    dct_parameters,
    expected_period_dynkin,
    expected_period_tensor,
    tamari_cydim,
    preprojective_period,
    dynkin_quiver,
    all_dynkin_types,
    dynkin_coxeter_polynomial,
    matching_dynkin_types
)

from trivext.qpa import export_qpa, lint_gap

from trivext.census import CensusReport, run_census
