"""Projective nested cartesian codes: closed-form parameters and brute-force oracles."""
from .codes import (GeneratorMatrix, code_equal, encode, generator_matrix, rank,
                    read_matrix, row_echelon, weight, write_matrix)
from .formulas import (DistanceResult, affine_dimension, affine_min_distance, binomial,
                       dimension_formula, footprint_count_formula, kl_decompose,
                       length_formula, prm_parameters, projective_min_distance)
from .gf import GF, FieldError, field_create
from .oracles import (SearchBudget, check_conjecture, exhaustive_min_distance,
                      hilbert_by_rank, witness_weight)
from .poly import (Polynomial, footprint_count_direct, monomial_basis, parse_polynomial,
                   witness_polynomial)
from .sets import (CartesianSpec, SpecError, classify, enumerate_projective_points,
                   load_spec, normalize, scale_spec, validate)

__version__ = "0.1.0"
