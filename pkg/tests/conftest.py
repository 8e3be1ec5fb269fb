"""Shared worked-example data used across the test modules."""

from boxball.crystal import parse_path

# mixed-capacity path whose rigged configuration is computed two ways
MIXED_PATH = parse_path("1111.11.22.12.2.122.122.1112")
MIXED_PAIRS = {(6, 0), (2, 4), (1, 1)}

# long non-highest path with negative riggings and vacancy numbers
LONG_PATH = parse_path(
    "22.2.2.1.1122.112.1.11.222.12.11.2.2.2.22."
    "2.1122.22.2.222.1.112.1.12.1222.11122.2.22.2.2"
)
LONG_PAIRS = [(4, 8), (4, 8), (1, 10), (2, 8), (3, 2), (16, -15), (2, 0), (5, -5)]

# periodic capacity-3 state driven through the whole scattering pipeline
PERIODIC_PATH = parse_path("122.122.112.112.111.122.111.111.112")
PERIODIC_HIGHEST = parse_path("111.122.111.111.112.122.122.112.112")

# inhomogeneous state for the theta-function tables
INHOM_PATH = parse_path("11.2.1.2.122.1.12.2.1")
