# Iteration multipliers of the tester loops.
DEFAULT_C1 = 4.0
DEFAULT_C2 = 6.0

# p = (k * log2(1/eps) + P_SHIFT) ** P_DEGREE
DEFAULT_P_DEGREE = 3
DEFAULT_P_SHIFT = 2.0

DEFAULT_SUFFIX_SCALE_MULTIPLIER = 4.0
DEFAULT_SUFFIX_REP_MULTIPLIER = 4.0

# n-independent caps; None disables a cap.
DEFAULT_MAX_ITERATIONS = 16
DEFAULT_MAX_SUFFIX_REPETITIONS = 8
DEFAULT_MAX_SCALE_SAMPLES = 8
DEFAULT_MAX_DENSITY_GUESSES = 4
DEFAULT_MAX_BASE_SAMPLES = 32
DEFAULT_MAX_FITTING_WINDOWS = 2

# Caps of a search nested d levels deep shrink by 2 ** (CAP_DECAY * d).
DEFAULT_CAP_DECAY = 3

DEFAULT_EPS = 0.25
DEFAULT_DELTA = 0.1
DEFAULT_SEED = 0
DEFAULT_TRIALS = 200

# Find-Good-Split proximity parameter used by the fitting branch.
FITTING_XI = 0.25

# Rational snapping for float parameters in exact certificate checks.
FRACTION_DENOMINATOR_LIMIT = 1_000_000
