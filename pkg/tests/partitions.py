"""Brute-force set partitions, independent of the package's enumerators."""

from itertools import combinations_with_replacement


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def count_partitions(n, k):
    return sum(1 for p in set_partitions(range(n)) if len(p) == k)


def complete_homogeneous(values, degree):
    """h_degree(values): sum of all monomials of the given degree."""
    if degree == 0:
        return 1
    total = 0
    for combo in combinations_with_replacement(values, degree):
        term = 1
        for v in combo:
            term = term * v
        total = total + term
    return total
