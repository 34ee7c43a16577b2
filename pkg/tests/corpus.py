"""Test rings shared by several test modules."""

from __future__ import annotations

from thrfix.ring_inv import (
    cyclic_group_ring,
    cyclic_ring,
    finite_field,
    gaussian_integers,
    group_ring,
    integers,
    matrix_ring,
    product,
    quaternion_ring,
    symmetric_group_table,
    truncated_polynomial,
)

F2 = cyclic_ring(2)
F3 = finite_field(3)


def klein_table():
    return [[a ^ b for b in range(4)] for a in range(4)]


def finite_corpus():
    """Finite rings of order at most 256."""
    return [
        cyclic_ring(2), cyclic_ring(3), cyclic_ring(4), cyclic_ring(5), cyclic_ring(6),
        cyclic_ring(8), cyclic_ring(9), cyclic_ring(12), cyclic_ring(16), cyclic_ring(25),
        finite_field(2, 2), finite_field(2, 2, "frobenius_half"), finite_field(2, 3),
        finite_field(3, 2), finite_field(3, 2, "frobenius_half"), finite_field(5, 2, "frobenius_half"),
        truncated_polynomial(F2, 2), truncated_polynomial(F2, 3), truncated_polynomial(F2, 4),
        truncated_polynomial(cyclic_ring(4), 2), truncated_polynomial(F3, 2),
        matrix_ring(F2, 2), matrix_ring(F3, 2), matrix_ring(cyclic_ring(4), 2),
        cyclic_group_ring(F2, 2), cyclic_group_ring(F2, 3), cyclic_group_ring(F2, 4),
        cyclic_group_ring(F3, 2), cyclic_group_ring(cyclic_ring(4), 2),
        group_ring(F2, symmetric_group_table(3), "S3"), group_ring(F2, klein_table(), "V4"),
        group_ring(truncated_polynomial(F2, 2), cyclic_group_ring_table(2), "C2"),
        product(F2, F2), product(F2, F3), product(F2, finite_field(2, 2, "frobenius_half")),
        product(truncated_polynomial(F2, 2), F2), product(product(F2, F2), F2),
        product(matrix_ring(F2, 2), F2),
        quaternion_ring(2), quaternion_ring(3),
    ]


def cyclic_group_ring_table(m):
    from thrfix.ring_inv import cyclic_group_table

    return cyclic_group_table(m)


def infinite_corpus():
    return [
        integers(), gaussian_integers(), quaternion_ring(0), matrix_ring(integers(), 2),
        cyclic_group_ring(integers(), 2), product(integers(), integers()),
        truncated_polynomial(integers(), 2), product(integers(), F2),
    ]


def full_corpus():
    return finite_corpus() + infinite_corpus()
