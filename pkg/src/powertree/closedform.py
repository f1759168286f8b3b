"""Closed-form tree counts for cyclic, dihedral, dicyclic and EPO groups.

The cyclic formulas reduce the n x n ones-plus-Laplacian determinant to a
determinant indexed by the middle divisors of n (all divisors except n and 1),
with the incomparability graph of those divisors supplying the off-diagonal
pattern. Everything is evaluated in exact integer or rational arithmetic and
the final divisions are checked for exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import (
    DiscrepancyDetected,
    EqualPrimes,
    InvalidPair,
    NotEPO,
    NotPowerOfTwo,
    NotPrime,
    TooManyDivisors,
    TrivialGroup,
)
from .groups import FiniteGroup, count_cyclic_subgroups
from .numutil import divisors, factorize, is_prime, phi
from .powergraph import degree_in_cyclic
from .treecount import TreeNumber, exact_integer_determinant

EXPANSION_LIMIT = 20


@dataclass(frozen=True)
class DivisorProfile:
    """Per-divisor data for the power graph of Z_n.

    divisors descend from n to 1. degrees[i] is the common degree of the
    phi(divisors[i]) elements of that order; deg_plus_one[i] is the matching
    diagonal entry of the ones-plus-Laplacian. The ratio lists cover middle
    divisors only (indices 1..k-2).
    """

    n: int
    divisors: tuple[int, ...]
    totients: tuple[int, ...]
    degrees: tuple[int, ...]
    deg_plus_one: tuple[int, ...]
    full_ratios: tuple[Fraction, ...]
    reduced_ratios: tuple[Fraction, ...]
    full_ratio_product: Fraction
    reduced_ratio_product: Fraction

    @property
    def middle(self) -> tuple[int, ...]:
        return self.divisors[1:-1]


@dataclass(frozen=True)
class DivisorGraph:
    """Divisibility graph on the divisors of n, plus its middle complement."""

    n: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    middle: tuple[int, ...]
    complement_middle_edges: tuple[tuple[int, int], ...]


def _comparable(a: int, b: int) -> bool:
    return a % b == 0 or b % a == 0


def divisor_profile(n: int) -> DivisorProfile:
    if n < 1:
        raise ValueError("divisor profile needs n >= 1")
    divs = tuple(sorted(divisors(n), reverse=True))
    tots = tuple(phi(d) for d in divs)
    if sum(tots) != n:
        raise DiscrepancyDetected(f"totients of divisors of {n} do not sum to {n}")
    degs = tuple(degree_in_cyclic(n, n // d % n) for d in divs)
    mvals = tuple(d + 1 for d in degs)
    k = len(divs)
    full = tuple(Fraction(mvals[i], tots[i]) for i in range(1, k - 1))
    red = tuple(Fraction(degs[i], tots[i]) for i in range(1, k - 1))
    return DivisorProfile(
        n=n,
        divisors=divs,
        totients=tots,
        degrees=degs,
        deg_plus_one=mvals,
        full_ratios=full,
        reduced_ratios=red,
        full_ratio_product=prod(full, start=Fraction(1)),
        reduced_ratio_product=prod(red, start=Fraction(1)),
    )


def divisor_graph(n: int) -> DivisorGraph:
    divs = tuple(sorted(divisors(n), reverse=True))
    edges = tuple(
        (divs[i], divs[j])
        for i in range(len(divs))
        for j in range(i + 1, len(divs))
        if _comparable(divs[i], divs[j])
    )
    middle = divs[1:-1] if len(divs) > 2 else ()
    comp = tuple(
        (middle[i], middle[j])
        for i in range(len(middle))
        for j in range(i + 1, len(middle))
        if not _comparable(middle[i], middle[j])
    )
    return DivisorGraph(n=n, vertices=divs, edges=edges, middle=middle,
                        complement_middle_edges=comp)


def _middle_determinant(prof: DivisorProfile, diagonal: tuple[int, ...]) -> int:
    """det of (diag entries + totient-scaled incomparability rows).

    Row i of the rational middle matrix is scaled by totients[i], turning
    ratio diagonals into plain integers and adjacency ones into totients.
    """
    divs = prof.divisors
    mids = range(1, len(divs) - 1)
    mat = [
        [
            diagonal[i] if i == j else (prof.totients[i] if not _comparable(divs[i], divs[j]) else 0)
            for j in mids
        ]
        for i in mids
    ]
    return exact_integer_determinant(mat)


def _factored_quotient(bases_num, det_num: int, bases_den, square_base: int) -> dict[int, int]:
    """Exponent arithmetic for (prod b^e * det) / (prod b * square^2)."""
    acc: dict[int, int] = {}

    def bump(value: int, times: int) -> None:
        if value == 1 or times == 0:
            return
        for p, e in factorize(value).items():
            acc[p] = acc.get(p, 0) + e * times

    for base, exp in bases_num:
        bump(base, exp)
    bump(det_num, 1)
    for base in bases_den:
        bump(base, -1)
    bump(square_base, -2)
    if any(e < 0 for e in acc.values()):
        raise DiscrepancyDetected(f"non-exact closed-form division: {acc}")
    return {p: e for p, e in acc.items() if e > 0}


def kappa_cyclic(n: int) -> TreeNumber:
    """Tree count of the power graph of Z_n, by the middle-divisor determinant."""
    prof = divisor_profile(n)
    k = len(prof.divisors)
    det = _middle_determinant(prof, prof.deg_plus_one)
    num = prod(m**t for m, t in zip(prof.deg_plus_one, prof.totients)) * det
    den = prod(prof.deg_plus_one[1 : k - 1]) * n * n
    value, rem = divmod(num, den)
    if rem:
        raise DiscrepancyDetected(f"kappa(Z_{n}) division not exact")
    factors = _factored_quotient(
        list(zip(prof.deg_plus_one, prof.totients)),
        det,
        prof.deg_plus_one[1 : k - 1],
        n,
    )
    return TreeNumber(value, factors)


def kappa_cyclic_reduced(n: int) -> TreeNumber:
    """Tree count of the power graph of Z_n with the identity deleted."""
    if n < 2:
        raise TrivialGroup("reduced tree count needs n >= 2")
    prof = divisor_profile(n)
    k = len(prof.divisors)
    det = _middle_determinant(prof, prof.degrees)
    num = prod(
        prof.degrees[i] ** prof.totients[i] for i in range(k - 1)
    ) * det
    den = prod(prof.degrees[1 : k - 1]) * (n - 1) * (n - 1)
    value, rem = divmod(num, den)
    if rem:
        raise DiscrepancyDetected(f"kappa(Z_{n} reduced) division not exact")
    factors = _factored_quotient(
        [(prof.degrees[i], prof.totients[i]) for i in range(k - 1)],
        det,
        prof.degrees[1 : k - 1],
        n - 1,
    )
    return TreeNumber(value, factors)


def _subset_expansion(prof: DivisorProfile, ratios, ratio_product, outer, square):
    """Literal sum over induced subgraphs of the middle incomparability graph."""
    divs = prof.divisors
    mids = list(range(1, len(divs) - 1))
    if len(mids) > EXPANSION_LIMIT:
        raise TooManyDivisors(
            f"{len(mids)} middle divisors exceed the 2^{EXPANSION_LIMIT} subset cap"
        )
    total = Fraction(0)
    m = len(mids)
    for mask in range(1 << m):
        inside = [i for i in range(m) if mask >> i & 1]
        sub = [
            [
                0 if a == b else int(not _comparable(divs[mids[a]], divs[mids[b]]))
                for b in inside
            ]
            for a in inside
        ]
        det_a = exact_integer_determinant(sub)
        if det_a == 0:
            continue
        outside = prod(
            (ratios[i] for i in range(m) if not mask >> i & 1),
            start=Fraction(1),
        )
        total += det_a * outside
    kappa = Fraction(outer) * total / (ratio_product * square * square)
    if kappa.denominator != 1:
        raise DiscrepancyDetected("subset expansion did not divide exactly")
    return TreeNumber(kappa.numerator)


def kappa_cyclic_expansion(n: int) -> TreeNumber:
    """Tree count of P(Z_n) by explicit subset summation; equals kappa_cyclic."""
    prof = divisor_profile(n)
    outer = prod(m**t for m, t in zip(prof.deg_plus_one, prof.totients))
    return _subset_expansion(
        prof, prof.full_ratios, prof.full_ratio_product, outer, n
    )


def kappa_pq(p: int, q: int, reduced: bool = False) -> TreeNumber:
    """Tree count for Z_pq, distinct primes p, q, in fully factored form."""
    if p == q:
        raise EqualPrimes(f"need distinct primes, got p = q = {p}")
    if not is_prime(p) or not is_prime(q):
        raise NotPrime(f"kappa_pq needs two primes, got ({p}, {q})")
    n = p * q
    if reduced:
        bases = [
            (n - 1, (p - 1) * (q - 1) - 1),
            (n - p, q - 2),
            (n - q, p - 2),
            (n - p - q + 1, 1),
        ]
    else:
        bases = [
            (n, (p - 1) * (q - 1)),
            (n - p + 1, q - 2),
            (n - q + 1, p - 2),
            (n - p - q + 2, 1),
        ]
    value = prod(b**e for b, e in bases)
    acc: dict[int, int] = {}
    for b, e in bases:
        if e == 0 or b == 1:
            continue
        for prime, mult in factorize(b).items():
            acc[prime] = acc.get(prime, 0) + mult * e
    return TreeNumber(value, acc)


def kappa_dihedral(n: int) -> TreeNumber:
    """Tree count of P(D_2n); the n pendant reflection edges contribute 1 each."""
    return kappa_cyclic(n)


def kappa_quaternion_reduced(n: int) -> TreeNumber:
    """Tree count of the identity-deleted power graph of the dicyclic Q_4n.

    The unique involution is a cut vertex joining n triangles to the reduced
    graph of the rotation subgroup Z_2n, so the count is 3^n times that one.
    """
    base = kappa_cyclic_reduced(2 * n)
    factors = None
    if base.factorization is not None:
        factors = dict(base.factorization)
        factors[3] = factors.get(3, 0) + n
    return TreeNumber(3**n * base.value, factors)


def kappa_quaternion_pow2(n: int) -> TreeNumber:
    """Tree count of P(Q_4n) for n a power of two: 2^(5n-1) * n^(2n-2)."""
    if n < 1 or n & (n - 1):
        raise NotPowerOfTwo(f"need n a power of two, got {n}")
    j = n.bit_length() - 1
    exponent = 5 * n - 1 + j * (2 * n - 2)
    return TreeNumber(1 << exponent, {2: exponent})


def kappa_elementary_abelian(p: int, k: int) -> TreeNumber:
    """Tree count for the elementary abelian group of order p^k.

    The (p^k - 1)/(p - 1) cyclic subgroups of order p meet only in the
    identity, so the count is p raised to (p-2) per subgroup.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("rank must be >= 1")
    exponent = (p**k - 1) // (p - 1) * (p - 2)
    return TreeNumber(p**exponent, {p: exponent} if exponent else {})


def kappa_epo(g: FiniteGroup) -> TreeNumber:
    """Tree count for a group whose non-identity elements all have prime order."""
    for i in range(1, g.order):
        if not is_prime(g.element_order[i]):
            raise NotEPO(
                f"{g.name} has an element of composite order {g.element_order[i]}"
            )
    factors: dict[int, int] = {}
    for p in sorted(set(g.element_order[1:])):
        exponent = (p - 2) * count_cyclic_subgroups(g, p)
        if exponent:
            factors[p] = exponent
    value = prod(p**e for p, e in factors.items())
    return TreeNumber(value, factors)


def kappa_semidirect_pq(p: int, q: int) -> TreeNumber:
    """Tree count p^(p-2) * q^(p(q-2)) for the nonabelian group of order pq."""
    if not (is_prime(p) and is_prime(q) and q < p and (p - 1) % q == 0):
        raise InvalidPair(
            f"need primes with q < p and p = 1 mod q, got ({p}, {q})"
        )
    factors = {}
    if p > 2:
        factors[p] = p - 2
    if q > 2:
        factors[q] = p * (q - 2)
    return TreeNumber(p ** (p - 2) * q ** (p * (q - 2)), factors)
