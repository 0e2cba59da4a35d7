"""Small exact integer helpers: primality, sieving, factoring, prime powers.

Everything here is deterministic trial-division / sieve arithmetic; the sizes
in scope (annihilators below 2^33, field sizes below 2^32) never need more.
"""

from math import gcd, isqrt

from .errors import NotPrimePower

_FACTOR_LIMIT = 1 << 63


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, by Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(limit + 1) if flags[i]]


def prime_powers(limit: int) -> list[int]:
    """All prime powers p^k <= limit (k >= 1), ascending."""
    out = []
    for p in sieve_primes(limit):
        q = p
        while q <= limit:
            out.append(q)
            q *= p
    out.sort()
    return out


def split_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^k; raise NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    n = q
    p = None
    f = 2
    while f * f <= n:
        if n % f == 0:
            p = f
            break
        f += 1 if f == 2 else 2
    if p is None:
        return q, 1
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, k


def factorize(n: int) -> list[int]:
    """Prime factors of n with multiplicity, ascending, by trial division.

    Guarded to n < 2^63; all in-scope values are far smaller.
    """
    if not 1 <= n < _FACTOR_LIMIT:
        raise ValueError(f"factorize requires 1 <= n < 2^63, got {n}")
    out = []
    while n % 2 == 0:
        out.append(2)
        n //= 2
    f = 3
    while f * f <= n:
        while n % f == 0:
            out.append(f)
            n //= f
        f += 2
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    counts: dict[int, int] = {}
    for p in factorize(n):
        counts[p] = counts.get(p, 0) + 1
    out = [1]
    for p, e in counts.items():
        powers = [p**i for i in range(e + 1)]
        out = [d * w for d in out for w in powers]
    out.sort()
    return out


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, u, v) with a*u + b*v = g = gcd(a, b)."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_u, u = u, old_u - qt * u
        old_v, v = v, old_v - qt * v
    return old_r, old_u, old_v
