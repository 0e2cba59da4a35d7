"""Point orders via baby-step giant-steps in the Hasse interval, plus the
integer machinery (CRT merging, trace-candidate logic) the counting engine
builds on.

All interval arithmetic is integer-exact through isqrt; the square-field
cases attain |t| = 2*sqrt(q) exactly, so floating point would be off by one
precisely where the interesting supersingular curves live.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .curve import Curve, Point
from .errors import IncompatibleCongruence, InternalInvariantError
from .integers import divisors, ext_gcd, factorize, lcm

__all__ = [
    "HasseInterval",
    "Congruence",
    "hasse_interval",
    "multiples_in_interval",
    "bsgs_annihilator",
    "exact_order",
    "crt_merge",
    "unique_trace_candidate",
    "trace_candidates",
    "factorize",
    "divisors",
    "lcm",
    "gcd",
    "isqrt",
]


@dataclass(frozen=True)
class HasseInterval:
    """[q+1-2*sqrt(q), q+1+2*sqrt(q)] with integer endpoints."""

    q: int
    lo: int
    hi: int
    trace_bound: int

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi


@dataclass(frozen=True)
class Congruence:
    """The constraint x = a (mod m), with the residue reduced."""

    a: int
    m: int

    def __post_init__(self):
        if self.m < 1 or not 0 <= self.a < self.m:
            raise ValueError(f"bad congruence ({self.a} mod {self.m})")


def hasse_interval(q: int) -> HasseInterval:
    """The interval guaranteed to contain #E for curves over F_q."""
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    tb = isqrt(4 * q)
    return HasseInterval(q=q, lo=q + 1 - tb, hi=q + 1 + tb, trace_bound=tb)


def multiples_in_interval(m: int, interval: HasseInterval) -> list[int]:
    """All multiples of m inside [lo, hi], ascending."""
    if m < 1:
        raise ValueError("m must be positive")
    first = -(-interval.lo // m) * m
    return list(range(first, interval.hi + 1, m))


# ---------------------------------------------------------------------------
# baby-step giant-steps
# ---------------------------------------------------------------------------

class OpCounter:
    """Mutable counter for group operations performed inside BSGS."""

    __slots__ = ("adds",)

    def __init__(self):
        self.adds = 0


def _counted_add(curve: Curve, p: Point, q: Point, ops: OpCounter | None) -> Point:
    if ops is not None:
        ops.adds += 1
    return curve.add_points(p, q)


def _counted_scalar(curve: Curve, n: int, pt: Point, ops: OpCounter | None) -> Point:
    if n < 0:
        return _counted_scalar(curve, -n, curve.negate(pt), ops)
    acc = curve.infinity()
    base = pt
    while n:
        if n & 1:
            acc = _counted_add(curve, acc, base, ops)
        n >>= 1
        if n:
            base = _counted_add(curve, base, base, ops)
    return acc


def bsgs_annihilator(curve: Curve, pt: Point, ops: OpCounter | None = None) -> int:
    """Some m in the Hasse interval with m*P = infinity.

    Searches for t with t*P = (q+1)*P over |t| <= 2*sqrt(q) using baby steps
    j*P (keyed by the x-encoding, y disambiguating the sign) and giant steps
    of stride 2s-1, for O(q^(1/4)) group operations overall.
    """
    interval = hasse_interval(curve.spec.q)
    if pt.is_infinity:
        return interval.lo
    tb = interval.trace_bound
    s = max(2, isqrt(tb) + 1)

    # baby table: x-encoding of j*P -> list of (j, y-encoding)
    table: dict[int, list[tuple[int, int]]] = {}
    jp = pt
    for j in range(1, s):
        if jp.is_infinity:
            # order of P divides j, so any multiple of j annihilates; the
            # interval is far wider than s, so one lands inside it
            return -(-interval.lo // j) * j
        table.setdefault(jp.x.enc, []).append((j, jp.y.enc))
        if j < s - 1:
            jp = _counted_add(curve, jp, pt, ops)

    stride = 2 * s - 1
    c = -tb + s - 1
    # R = (q+1-c)*P, stepped down by stride*P each round
    r = _counted_scalar(curve, curve.spec.q + 1 - c, pt, ops)
    step = curve.negate(_counted_scalar(curve, stride, pt, ops))

    def accept(t: int) -> int | None:
        if abs(t) <= tb:
            return curve.spec.q + 1 - t
        return None

    while c - (s - 1) <= tb:
        if r.is_infinity:
            m = accept(c)
            if m is not None:
                return m
        else:
            hits = table.get(r.x.enc)
            if hits:
                ry = r.y.enc
                for j, yj in hits:
                    # r = (q+1-c-t')*P matched against +-j*P
                    if ry == yj:
                        m = accept(c + j)
                        if m is not None:
                            return m
                    neg_y = curve.negate(Point(curve, r.x, curve.spec.element(yj))).y.enc
                    if ry == neg_y:
                        m = accept(c - j)
                        if m is not None:
                            return m
        c += stride
        r = _counted_add(curve, r, step, ops)
    raise InternalInvariantError("BSGS found no annihilator in the Hasse interval")


def exact_order(curve: Curve, pt: Point, annihilator: int) -> int:
    """The exact order of P, given any multiple of it that kills P."""
    if annihilator < 1:
        raise ValueError("annihilator must be positive")
    if not curve.scalar_mul(annihilator, pt).is_infinity:
        raise ValueError("claimed annihilator does not kill the point")
    n = annihilator
    for ell in sorted(set(factorize(annihilator))):
        while n % ell == 0 and curve.scalar_mul(n // ell, pt).is_infinity:
            n //= ell
    return n


# ---------------------------------------------------------------------------
# congruence / trace logic
# ---------------------------------------------------------------------------

def crt_merge(c1: Congruence, c2: Congruence) -> Congruence:
    """The single congruence equivalent to both, modulus lcm(m1, m2)."""
    g, u, _ = ext_gcd(c1.m, c2.m)
    if (c2.a - c1.a) % g != 0:
        raise IncompatibleCongruence(f"{c1} and {c2} have no common solution")
    l = c1.m // g * c2.m
    step = (c2.a - c1.a) // g * u % (c2.m // g)
    return Congruence(a=(c1.a + c1.m * step) % l, m=l)


def trace_candidates(c: Congruence, q: int) -> list[int]:
    """All t = a (mod m) with |t| <= 2*sqrt(q), ascending."""
    tb = hasse_interval(q).trace_bound
    first = -tb + (c.a + tb) % c.m
    return list(range(first, tb + 1, c.m))


def unique_trace_candidate(c: Congruence, q: int) -> int | None:
    """The single admissible trace if the congruence pins it down, else None."""
    cands = trace_candidates(c, q)
    if len(cands) == 1:
        return cands[0]
    return None
