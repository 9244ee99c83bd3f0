"""Independent oracles, kept free of the library's own code paths.

Plain coefficient-list polynomial division and brute-force enumeration,
used to cross-check the semigroup construction and the GF(2) solver.
"""

from __future__ import annotations


def brute_semigroup(p: int, q: int, bound: int) -> list[int]:
    """{a*p + b*q} by a double loop."""
    members = set()
    a = 0
    while a * p <= bound:
        b = 0
        while a * p + b * q <= bound:
            members.add(a * p + b * q)
            b += 1
        a += 1
    return sorted(members)


def poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Long division, ascending coefficient lists; remainder must vanish."""
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    quotient = [0] * (len(num) - len(den) + 1)
    for k in range(len(quotient) - 1, -1, -1):
        coeff, rem = divmod(num[k + len(den) - 1], den[-1])
        assert rem == 0, "division is not exact"
        quotient[k] = coeff
        for i, d in enumerate(den):
            num[k + i] -= coeff * d
    assert all(c == 0 for c in num), "nonzero remainder"
    return quotient


def torus_alexander_by_division(p: int, q: int) -> list[tuple[int, int]]:
    """Symmetrized coefficients of (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).

    Returns sorted (exponent, coefficient) pairs centered by t^(-(p-1)(q-1)/2).
    """
    num = poly_mul([-1] + [0] * (p * q - 1) + [1], [-1, 1])
    den = poly_mul([-1] + [0] * (p - 1) + [1], [-1] + [0] * (q - 1) + [1])
    quotient = poly_divide_exact(num, den)
    shift = (p - 1) * (q - 1) // 2
    return [(e - shift, c) for e, c in enumerate(quotient) if c]


def brute_solve_gf2(rows: list[list[int]], rhs: list[int]) -> list[int] | None:
    """Try all 2^n candidate vectors."""
    ncols = len(rows[0]) if rows else 0
    for bits in range(1 << ncols):
        x = [(bits >> j) & 1 for j in range(ncols)]
        if all(
            sum(rows[i][j] * x[j] for j in range(ncols)) % 2 == rhs[i] % 2
            for i in range(len(rows))
        ):
            return x
    return None
