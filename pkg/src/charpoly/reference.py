"""Published reference values used by the verification suites.

``WEYL_TABLE`` lists the Weyl character polynomials for ``|lam| <= 5`` in
canonical text form; ``RESTRICTION_MATRIX`` the stable restriction
coefficients ``r[lam][mu]`` for ``|lam|, |mu| <= 5`` with rows and columns in
block order (sizes ascending, reverse-lexicographic inside a size).
"""

from __future__ import annotations

from .partitions import partitions_upto

WEYL_TABLE: dict[tuple[int, ...], str] = {
    (1,): "X1",
    (2,): "1/2*X1^2 + 1/2*X1 + X2",
    (1, 1): "1/2*X1^2 - 1/2*X1 - X2",
    (3,): "1/6*X1^3 + 1/2*X1^2 + X1*X2 + 1/3*X1 + X3",
    (2, 1): "1/3*X1^3 - 1/3*X1 - X3",
    (1, 1, 1): "1/6*X1^3 - 1/2*X1^2 - X1*X2 + 1/3*X1 + X3",
    (4,): "1/24*X1^4 + 1/4*X1^3 + 1/2*X1^2*X2 + 11/24*X1^2 + 1/2*X1*X2 + 1/2*X2^2 + X1*X3 + 1/4*X1 + 1/2*X2 + X4",
    (3, 1): "1/8*X1^4 + 1/4*X1^3 + 1/2*X1^2*X2 - 1/8*X1^2 - 1/2*X1*X2 - 1/2*X2^2 - 1/4*X1 - 1/2*X2 - X4",
    (2, 2): "1/12*X1^4 - 1/12*X1^2 + X1*X2 + X2^2 - X1*X3",
    (2, 1, 1): "1/8*X1^4 - 1/4*X1^3 - 1/2*X1^2*X2 - 1/8*X1^2 - 1/2*X1*X2 - 1/2*X2^2 + 1/4*X1 + 1/2*X2 + X4",
    (1, 1, 1, 1): "1/24*X1^4 - 1/4*X1^3 - 1/2*X1^2*X2 + 11/24*X1^2 + 1/2*X1*X2 + 1/2*X2^2 + X1*X3 - 1/4*X1 - 1/2*X2 - X4",
    (5,): "1/120*X1^5 + 1/12*X1^4 + 1/6*X1^3*X2 + 7/24*X1^3 + 1/2*X1^2*X2 + 1/2*X1*X2^2 + 1/2*X1^2*X3 + 5/12*X1^2 + 5/6*X1*X2 + 1/2*X1*X3 + X2*X3 + X1*X4 + 1/5*X1 + X5",
    (4, 1): "1/30*X1^5 + 1/6*X1^4 + 1/3*X1^3*X2 + 1/6*X1^3 + 1/2*X1^2*X3 - 1/6*X1^2 - 1/3*X1*X2 - 1/2*X1*X3 - X2*X3 - 1/5*X1 - X5",
    (3, 2): "1/24*X1^5 + 1/12*X1^4 + 1/6*X1^3*X2 - 1/24*X1^3 + 1/2*X1^2*X2 + 1/2*X1*X2^2 - 1/2*X1^2*X3 - 1/12*X1^2 - 1/6*X1*X2 + 1/2*X1*X3 + X2*X3 - X1*X4",
    (3, 1, 1): "1/20*X1^5 - 1/4*X1^3 - X1^2*X2 - X1*X2^2 + 1/5*X1 + X5",
    (2, 2, 1): "1/24*X1^5 - 1/12*X1^4 - 1/6*X1^3*X2 - 1/24*X1^3 + 1/2*X1^2*X2 + 1/2*X1*X2^2 - 1/2*X1^2*X3 + 1/12*X1^2 + 1/6*X1*X2 - 1/2*X1*X3 - X2*X3 + X1*X4",
    (2, 1, 1, 1): "1/30*X1^5 - 1/6*X1^4 - 1/3*X1^3*X2 + 1/6*X1^3 + 1/2*X1^2*X3 + 1/6*X1^2 + 1/3*X1*X2 + 1/2*X1*X3 + X2*X3 - 1/5*X1 - X5",
    (1, 1, 1, 1, 1): "1/120*X1^5 - 1/12*X1^4 - 1/6*X1^3*X2 + 7/24*X1^3 + 1/2*X1^2*X2 + 1/2*X1*X2^2 + 1/2*X1^2*X3 - 5/12*X1^2 - 5/6*X1*X2 - 1/2*X1*X3 - X2*X3 - X1*X4 + 1/5*X1 + X5",
}

MATRIX_INDEX: list[tuple[int, ...]] = partitions_upto(5)

RESTRICTION_MATRIX: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (3, 4, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 3, 2, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (5, 7, 5, 2, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 7, 5, 6, 2, 3, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 3, 4, 1, 1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 1, 3, 0, 2, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    (7, 12, 9, 5, 5, 3, 0, 2, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    (5, 14, 13, 12, 6, 9, 3, 2, 3, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0),
    (4, 10, 11, 8, 6, 8, 2, 1, 3, 2, 1, 0, 0, 0, 1, 0, 0, 0, 0),
    (0, 3, 4, 8, 1, 7, 6, 0, 2, 1, 3, 1, 0, 0, 0, 1, 0, 0, 0),
    (1, 3, 4, 3, 2, 5, 1, 0, 1, 2, 2, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0, 1, 3, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
)
