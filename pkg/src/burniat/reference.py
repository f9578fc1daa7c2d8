"""Published search inputs and outputs, kept verbatim for comparison.

Vectors are in the search coordinates: (eps0, eps1, eta0, eps2, zeta0) for the
5-dimensional group and (eps0, eta1, eps1, eta0, eps2, zeta0) for the
6-dimensional one.
"""

# one-dimensional subspaces every free kernel must avoid
PRIMARY_AVOID = (
    (0, 0, 0, 0, 1), (0, 0, 1, 0, 0), (1, 0, 0, 0, 0), (0, 0, 0, 1, 0),
    (0, 0, 1, 0, 1), (0, 1, 0, 0, 0), (0, 1, 0, 1, 0), (1, 0, 1, 0, 0),
    (1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (0, 1, 1, 0, 0), (0, 1, 0, 1, 1),
)

# the two homs found, as 5 x 2 matrices (row i is the image of basis vector i)
PRIMARY_HOMS = (
    ((1, 0), (1, 1), (0, 1), (0, 1), (1, 1)),
    ((1, 0), (1, 0), (0, 1), (1, 1), (1, 1)),
)

# the search tests the first nine subspaces; the remaining ones span the F-set
NODAL4_SUBSPACES = (
    (0, 0, 0, 0, 0, 1), (0, 0, 0, 1, 0, 0), (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0),
    (0, 0, 0, 1, 0, 1), (0, 0, 1, 0, 0, 0), (1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0),
    (1, 0, 0, 1, 0, 0), (1, 0, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0), (0, 0, 1, 0, 1, 1),
    (0, 1, 0, 0, 0, 0), (0, 1, 0, 1, 1, 1), (1, 1, 1, 0, 0, 1), (1, 1, 1, 1, 1, 0),
)
NODAL4_AVOID = NODAL4_SUBSPACES[:9]

NODAL4_F = (
    (1, 0, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0), (0, 0, 1, 0, 1, 1), (0, 1, 0, 0, 0, 0),
    (0, 1, 0, 1, 1, 1), (1, 1, 1, 0, 0, 1), (1, 1, 1, 1, 1, 0),
)

# prescribed images: w1 -> (1, 0), w2 -> (0, 1)
PRIMARY_W = ((1, 0, 0, 0, 0), (0, 0, 1, 0, 0))
NODAL4_W = ((1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0))

NODAL4_COUNTS = {"homs": 24, "with_one_fixed": 14, "pairs": 7}

# published identifications of the fundamental groups, as (order, small-group number)
PUBLISHED_PI1 = {
    "A": (16, 10), "B": (16, 10), "C": (16, 10),
    "D": (16, 12),
    "E": (16, 13), "F": (16, 13), "G": (16, 13),
}

# published fixed-point table sizes: (dimension 2, dimension 1, isolated)
TABLE_PARTITIONS = {"G0": (3, 6, 8), "G1": (3, 6, 4)}
