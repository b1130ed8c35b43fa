from typing import TYPE_CHECKING


if TYPE_CHECKING:
    from .types import OutputFormat, Precision

# region Genus
MIN_GENUS = 2
# endregion

# region Word text syntax
EMPTY_WORD_TOKEN = "-"
GENERATOR_A = "a"
GENERATOR_B = "b"
INVERSE_A = "A"
INVERSE_B = "B"
WORD_TOKEN_REGEX = r"^([abAB])([1-9]\d*)$"
# endregion

# region Mapping-class expression syntax
EXPR_PUSH = "push"
EXPR_TWIST = "twist"
EXPR_SWAP = "swap"
EXPR_IDENTITY = "id"
EXPR_COMPOSE = "*"
EXPR_POWER = "^"
EXPR_OPEN = "("
EXPR_CLOSE = ")"
EXPR_NAME_REGEX = r"[A-Za-z]+"
EXPR_INT_REGEX = r"[+-]?\d+"
EXPR_SEPARATOR = ","
# endregion

# region Word caps
DEFAULT_MAX_WORD_LENGTH = 4096
DEFAULT_EVAL_BUDGET = 256
# endregion

# region Numeric tolerances
CLASSIFY_EPS = 1e-9
RELATOR_RESIDUAL = 1e-9
DETERMINANT_TOL = 1e-12
CERTIFY_THRESHOLD = 0.25
WRAP_SNAP_WINDOW = 1e-12
EXTENDED_WRAP_WINDOW = 1e-30
LIFT_TIE_WINDOW = 1e-9
EXTENDED_PRECISION_BITS = 256
DEFAULT_ITERATIONS = 2**20
# endregion

# region Precision policies
PRECISION_DOUBLE: "Precision" = "double"
PRECISION_EXTENDED: "Precision" = "extended"
PRECISION_ON_DEMAND: "Precision" = "extended-on-demand"
PRECISION_POLICIES: tuple["Precision", ...] = (PRECISION_DOUBLE, PRECISION_ON_DEMAND)
DEFAULT_PRECISION: "Precision" = PRECISION_ON_DEMAND
# endregion

# region Reports
FORMAT_JSON: "OutputFormat" = "json"
FORMAT_CSV: "OutputFormat" = "csv"
OUTPUT_FORMATS: tuple["OutputFormat", ...] = (FORMAT_JSON, FORMAT_CSV)
JSON_INDENT = 2
CONJUGATION_CONVENTION = "conjugate(u, w) = w^-1 u w"
COMPOSITION_CONVENTION = "compose(f, h) = h after f (f applied first), represents phi*eta"
# endregion

# region Exit codes
EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_USAGE = 2
EXIT_CERTIFICATION = 3
# endregion

# region Default sample counts per property
DEFAULT_SEED = 0
DEFAULT_MAXLEN = 12
DEFAULT_COMPARE_SAMPLES = 1000
SAMPLE_COUNTS: dict[str, int] = {
    "reduce_inverse": 1000,
    "intersection_bilinear": 500,
    "surface_equal_matrix": 500,
    "push_descent": 500,
    "compose_associative": 100,
    "evaluate_homomorphism": 500,
    "no_elliptics": 500,
    "trans_conjugation": 500,
    "trans_central": 500,
    "tau_range": 1000,
    "tau_cocycle": 300,
    "tau_offsets": 100,
    "tau_mapping_class": 200,
    "iterative_oracle": 100,
    "r_additive": 500,
    "r_crossed": 300,
    "r_c_conjugate": 100,
    "r_lift_offsets": 100,
    "r_pointpush_bilinear": 200,
    "defect_transport": 100,
    "morita_defect": 500,
    "morita_insertion": 500,
    "cover_vs_tau": 200,
    "omega_integer": 500,
    "omega_field_defect": 500,
    "omega_difference": 500,
    "omega_theorem_instances": 20,
    "omega_punctured_torus": 200,
}

# Word lengths for properties stated at a fixed size; everything else uses --maxlen
PROPERTY_WORD_LENGTHS: dict[str, int] = {
    "reduce_inverse": 32,
    "push_descent": 8,
    "no_elliptics": 16,
    "r_pointpush_bilinear": 16,
    "omega_integer": 64,
}
# Push words up to this length are also checked against the composite automorphism
COMPOSITE_PUSH_MAXLEN = 4
# endregion
