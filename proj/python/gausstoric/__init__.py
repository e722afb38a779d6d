"""Exact combinatorial analysis of Gauss maps of projectively embedded
toric varieties.

The heavy lifting happens in the C++ extension ``gausstoric._core``; report
dictionaries keep every integer as an exact decimal string, matching the CLI
JSON schema.  ``as_int`` / ``as_matrix`` convert back to Python integers.
"""

from gausstoric._core import (  # noqa: F401
    InputError,
    PreconditionError,
    __version__,
    affinely_isomorphic,
    analyze,
    analyze_json,
    construct_birational_codim2,
    construct_birational_hypersurface,
    construct_with_fiber_and_image,
    construct_with_fiber_rank_components,
    decompose,
    developable,
    fiber_count,
    hermite_basis,
    rank_over_field,
    saturate,
    smith,
    verify_sweep,
)


def as_int(value):
    """Converts a report integer (decimal string) to a Python int."""
    return int(value)


def as_vector(values):
    return [int(v) for v in values]


def as_matrix(rows):
    return [[int(v) for v in row] for row in rows]
