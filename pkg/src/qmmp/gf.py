"""Generating-series engines for match-count distributions.

One engine per family of quadrant specs, each computing the exact truncated
series whose t^n coefficient is the match-count polynomial over the length-n
avoidance class.  Engines are organized around a first-return decomposition:
the t^n coefficient is assembled by convolving lower-order coefficients of
boundary engines, so everything stays in exact integer arithmetic.

Family naming follows the slot string of the quadrant spec: ``k0e0`` is
``(k, 0, EMPTY, 0)``, ``akel`` is ``(a, k, EMPTY, l)``, ``ekel`` is
``(EMPTY, k, EMPTY, l)``, and so on.  The 123-avoider series for specs whose
first or third slot is positive transport to 132-avoider engines; the genuinely
two-sided specs ``(0, k, 0, l)`` have their own bivariate recursion (peaks and
non-peaks tracked separately) and, for small ``(k, l)``, closed coefficient
formulas.

``KNOWN_ERRATA`` records the spots where a stated closed form, taken
literally, first diverges from the brute-force oracle; the shipped engines
use the corrected recursions, which the test suite re-validates against the
oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from . import mmp as _mmp
from .mmp import EMPTY, QuadrantSpec
from .perm import P123
from .series import BiPoly, IntPoly, TSeries, catalan, narayana, solve_quadratic

DEFAULT_TRUNC = 13


class NoEngineError(ValueError):
    """No closed form or recurrence covers the requested spec."""


@dataclass(frozen=True)
class SpecKey:
    """An (avoidance class, quadrant spec) pair with an implemented engine.

    Construction validates engine coverage, so holding a SpecKey is proof
    that :meth:`series` will not fall back to brute force.
    """

    avoid: str
    spec: QuadrantSpec

    def __post_init__(self) -> None:
        if self.avoid not in ("123", "132"):
            raise ValueError(f"unsupported avoidance class {self.avoid!r}")
        self.series(0)  # raises NoEngineError when nothing covers the spec

    def series(self, trunc: int = DEFAULT_TRUNC) -> TSeries:
        if self.avoid == "132":
            return q132_series(self.spec, trunc)
        return transport_123(self.spec, trunc)


# ---------------------------------------------------------------------------
# 132-avoider engines (third slot EMPTY), as cached coefficient lists


def _const(n: int) -> IntPoly:
    return IntPoly.const(catalan(n))


@lru_cache(maxsize=None)
def _c_00e0(trunc: int) -> tuple[IntPoly, ...]:
    # Base series F for (0, 0, EMPTY, 0): t F^2 - (1 + t - t x) F + 1 = 0.
    a = TSeries.t_power(1, trunc)
    b_coeffs = [IntPoly.const(-1)]
    if trunc >= 1:
        b_coeffs.append(IntPoly({0: -1, 1: 1}))
        b_coeffs.extend(IntPoly() for _ in range(trunc - 1))
    b = TSeries(b_coeffs)
    c = TSeries.one(trunc)
    return solve_quadratic(a, b, c, IntPoly.const(1)).coeffs


@lru_cache(maxsize=None)
def _c_k0e0(k: int, trunc: int) -> tuple[IntPoly, ...]:
    if k == 0:
        return _c_00e0(trunc)
    prev = TSeries(_c_k0e0(k - 1, trunc))
    return (TSeries.one(trunc) - prev.shift(1)).inverse().coeffs


@lru_cache(maxsize=None)
def _c_0ke0(k: int, trunc: int) -> tuple[IntPoly, ...]:
    if k == 0:
        return _c_00e0(trunc)
    base = _c_00e0(trunc)
    out = [IntPoly.const(1)]
    for n in range(1, trunc + 1):
        acc = IntPoly()
        for i in range(1, min(k - 1, n) + 1):
            acc = acc + catalan(i - 1) * _c_0ke0(k - i, trunc)[n - i]
        for i in range(k, n + 1):
            acc = acc + out[i - 1] * base[n - i]
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=None)
def _c_kle0(k: int, ell: int, trunc: int) -> tuple[IntPoly, ...]:
    if ell == 0:
        return _c_k0e0(k, trunc)
    if k == 0:
        return _c_0ke0(ell, trunc)
    right = _c_k0e0(k, trunc)
    left = _c_kle0(k - 1, ell, trunc)
    out = [IntPoly.const(1)]
    for n in range(1, trunc + 1):
        acc = IntPoly()
        for i in range(1, min(ell - 1, n) + 1):
            acc = acc + catalan(i - 1) * _c_kle0(k, ell - i, trunc)[n - i]
        for i in range(ell, n + 1):
            acc = acc + left[i - 1] * right[n - i]
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=None)
def _c_0kel(k: int, ell: int, trunc: int) -> tuple[IntPoly, ...]:
    if ell == 0:
        return _c_0ke0(k, trunc)
    if k == 0:
        # second and fourth slots swap by the inverse symmetry
        return _c_0ke0(ell, trunc)
    left = _c_0ke0(k, trunc)
    right = _c_0ke0(ell, trunc)
    out = [IntPoly.const(1)]
    for n in range(1, trunc + 1):
        if n <= k + ell:
            out.append(_const(n))
            continue
        acc = IntPoly()
        for i in range(1, min(k - 1, n) + 1):
            acc = acc + catalan(i - 1) * _c_0kel(k - i, ell, trunc)[n - i]
        for i in range(k, n - ell + 1):
            acc = acc + left[i - 1] * right[n - i]
        for j in range(min(ell - 1, n - 1) + 1):
            sub = out if j == 0 else _c_0kel(k, ell - j, trunc)
            acc = acc + catalan(j) * sub[n - j - 1]
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=None)
def _c_akel(a: int, k: int, ell: int, trunc: int) -> tuple[IntPoly, ...]:
    if a == 0:
        return _c_0kel(k, ell, trunc)
    if k == 0:
        return _c_kle0(a, ell, trunc)
    if ell == 0:
        return _c_kle0(a, k, trunc)
    left = _c_kle0(a - 1, k, trunc)
    right = _c_kle0(a, ell, trunc)
    out = [IntPoly.const(1)]
    for n in range(1, trunc + 1):
        if n <= a + k + ell:
            out.append(_const(n))
            continue
        acc = IntPoly()
        for i in range(1, min(k - 1, n) + 1):
            acc = acc + catalan(i - 1) * _c_akel(a, k - i, ell, trunc)[n - i]
        for i in range(k, n - ell + 1):
            acc = acc + left[i - 1] * right[n - i]
        for j in range(min(ell - 1, n - 1) + 1):
            acc = acc + catalan(j) * _c_akel(a - 1, k, ell - j, trunc)[n - j - 1]
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=None)
def _c_ekel(k: int, ell: int, trunc: int) -> tuple[IntPoly, ...]:
    if k == 0 and ell == 0:
        # 1 / (1 - t (C(t) + x - 1)): the x-power records hills.
        s = [IntPoly.x(1)]
        s.extend(_const(n) for n in range(1, trunc + 1))
        return (TSeries.one(trunc) - TSeries(s).shift(1)).inverse().coeffs
    if k == 0:
        return _c_ekel(ell, 0, trunc)
    base = _c_ekel(0, ell, trunc)
    out = [IntPoly.const(1)]
    for n in range(1, trunc + 1):
        acc = IntPoly()
        for i in range(1, min(k - 1, n) + 1):
            acc = acc + catalan(i - 1) * _c_ekel(k - i, ell, trunc)[n - i]
        for i in range(k, n + 1):
            acc = acc + catalan(i - 1) * base[n - i]
        out.append(acc)
    return tuple(out)


def q132_k0e0(k: int, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Series for (k, 0, EMPTY, 0) over 132-avoiders."""
    return TSeries(_c_k0e0(k, trunc))


def q132_0ke0(k: int, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Series for (0, k, EMPTY, 0) over 132-avoiders."""
    return TSeries(_c_0ke0(k, trunc))


def q132_kle0(k: int, ell: int, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Series for (k, ell, EMPTY, 0) over 132-avoiders."""
    return TSeries(_c_kle0(k, ell, trunc))


def q132_0kel(k: int, ell: int, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Series for (0, k, EMPTY, ell) over 132-avoiders."""
    return TSeries(_c_0kel(k, ell, trunc))


def q132_akel(a: int, k: int, ell: int, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Series for (a, k, EMPTY, ell) over 132-avoiders."""
    return TSeries(_c_akel(a, k, ell, trunc))


def q132_ekel(k: int, ell: int, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Series for (EMPTY, k, EMPTY, ell) over 132-avoiders (hills at k = ell = 0)."""
    return TSeries(_c_ekel(k, ell, trunc))


def q132_series(spec: QuadrantSpec, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Route a 132-avoider spec to its engine.

    This is the single place where boundary indices are delegated and the
    second/fourth-slot symmetry rewrites are applied.  Covered families:
    numeric (a, b, EMPTY, d) and (EMPTY, b, EMPTY, d).
    """
    a, b, c, d = spec.coords
    if c is EMPTY and a is not EMPTY and b is not EMPTY and d is not EMPTY:
        if a == 0:
            if b == 0 and d == 0:
                return TSeries(_c_00e0(trunc))
            if d == 0:
                return q132_0ke0(b, trunc)
            if b == 0:
                return q132_0ke0(d, trunc)
            return q132_0kel(b, d, trunc)
        if b == 0 and d == 0:
            return q132_k0e0(a, trunc)
        if d == 0:
            return q132_kle0(a, b, trunc)
        if b == 0:
            return q132_kle0(a, d, trunc)
        return q132_akel(a, b, d, trunc)
    if a is EMPTY and c is EMPTY and b is not EMPTY and d is not EMPTY:
        return q132_ekel(b, d, trunc)
    raise NoEngineError(
        f"no engine for MMP({spec}) over 132-avoiders; "
        f"fall back to oracle.brute_series(132, ...)"
    )


# ---------------------------------------------------------------------------
# 123-avoider bivariate engine for (0, k, 0, 0): peaks vs non-peaks


@lru_cache(maxsize=None)
def _c_biv(k1: int, k2: int, trunc: int) -> tuple[BiPoly, ...]:
    if k1 == 0 and k2 == 0:
        out = [BiPoly.const(1)]
        for n in range(1, trunc + 1):
            out.append(BiPoly({(p, n - p): narayana(n, p) for p in range(1, n + 1)}))
        return tuple(out)
    base = _c_biv(0, 0, trunc)
    x0 = BiPoly.term(1, 0)
    x1 = BiPoly.term(0, 1)
    out = [BiPoly.const(1)]
    if k2 == 0:
        # Only peaks carry a condition.  The first-arch block never helps a
        # peak match, while everything left of the return helps everything
        # in the tail.
        prev = _c_biv(k1 - 1, 0, trunc)
        block = _biv_specialized(0, 0, "x0=1", trunc)
        for n in range(1, trunc + 1):
            acc = prev[n - 1]
            for i in range(2, min(k1, n) + 1):
                acc = acc + x1 * block[i - 1] * _c_biv(k1 - i, 0, trunc)[n - i]
            for i in range(k1 + 1, n + 1):
                acc = acc + x1 * out[i - 1] * base[n - i]
            out.append(acc)
        return tuple(out)
    if k1 == 0:
        # Only non-peaks carry a condition; the lifted block gains one
        # non-matching non-peak and bumps the others' left-larger count by 1.
        prev = _c_biv(0, k2 - 1, trunc)
        block = _biv_specialized(0, 0, "x1=1", trunc)
        for n in range(1, trunc + 1):
            acc = x0 * prev[n - 1]
            for i in range(2, min(k2 - 1, n) + 1):
                acc = acc + block[i - 1] * _c_biv(0, k2 - i, trunc)[n - i]
            for i in range(max(k2, 2), n + 1):
                acc = acc + prev[i - 1] * base[n - i]
            out.append(acc)
        return tuple(out)
    prev = _c_biv(k1, k2 - 1, trunc)
    if k1 >= k2:
        block = _biv_specialized(0, k2 - 1, "x0=1", trunc)
        for n in range(1, trunc + 1):
            acc = BiPoly()
            for i in range(1, min(k1 - 1, n) + 1):
                acc = acc + block[i - 1] * _c_biv(k1 - i, max(k2 - i, 0), trunc)[n - i]
            for i in range(k1, n + 1):
                acc = acc + prev[i - 1] * base[n - i]
            out.append(acc)
        return tuple(out)
    block = _biv_specialized(k1, 0, "x1=1", trunc)
    for n in range(1, trunc + 1):
        acc = BiPoly()
        for i in range(1, min(k2 - 1, n) + 1):
            acc = acc + block[i - 1] * _c_biv(max(k1 - i, 0), k2 - i, trunc)[n - i]
        for i in range(k2, n + 1):
            acc = acc + prev[i - 1] * base[n - i]
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=None)
def _biv_specialized(k1: int, k2: int, which: str, trunc: int) -> tuple[BiPoly, ...]:
    src = _c_biv(k1, k2, trunc)
    if which == "x0=1":
        return tuple(p.at_x0_one() for p in src)
    return tuple(p.at_x1_one() for p in src)


def q123_bivariate(k1: int, k2: int, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Bivariate series over 123-avoiders: x0 tracks matching peaks (threshold
    k1 on quadrant II), x1 tracks matching non-peaks (threshold k2)."""
    if k1 < 0 or k2 < 0:
        raise ValueError("k1, k2 must be nonnegative")
    return TSeries(_c_biv(k1, k2, trunc))


def q123_0k00(k: int, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Series for (0, k, 0, 0) over 123-avoiders (bivariate engine at x0 = x1 = x)."""
    return TSeries(tuple(p.to_univariate() for p in _c_biv(k, k, trunc)))


# ---------------------------------------------------------------------------
# Closed coefficient formulas


_EXTREMAL_FAMILIES = (
    "theorem-4",
    "corollary-4",
    "theorem-04",
    "corollary-04",
    "corollary-05",
    "theorem-004",
    "theorem-0004",
)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integer closed form: {num}/{den}")
    return q


def _hook_count(k: int, ell: int) -> int:
    return _exact_div((k + 1) * math.comb(k + 2 * ell, ell), k + ell + 1)


def extremal_coeff(family: str, k: int, ell: int, m: int, n: int) -> int:
    """Top-degree coefficient of the match-count polynomial, per closed form.

    ``family`` selects which closed form (and therefore which spec shape and
    validity regime) applies; see _EXTREMAL_FAMILIES.  Raises ValueError
    outside the family's regime.
    """
    fam = family.replace("thm-", "theorem-").replace("cor-", "corollary-")
    if fam not in _EXTREMAL_FAMILIES:
        raise ValueError(f"unknown extremal family {family!r}")
    if min(k, ell, m) < 0:
        raise ValueError("parameters must be nonnegative")

    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise ValueError(f"{fam}: {msg}")

    if fam == "theorem-4":
        need(m == 0, "m is not a parameter here")
        need(n >= k + ell + 1, "requires n >= k + ell + 1")
        return catalan(k) * catalan(n - k - ell) * catalan(ell)
    if fam == "corollary-4":
        need(ell == 0 and m == 0, "only k is a parameter here")
        need(n >= k + 1, "requires n >= k + 1")
        return catalan(k) * catalan(n - k)
    if fam == "theorem-04":
        need(m == 0, "m is not a parameter here")
        need(n >= k + ell + 1, "requires n >= k + ell + 1")
        return catalan(k) * catalan(ell)
    if fam == "corollary-04":
        need(ell == 0 and m == 0, "only k is a parameter here")
        need(n >= k + 1, "requires n >= k + 1")
        return catalan(k)
    if fam == "corollary-05":
        need(m == 0, "m is not a parameter here")
        need(n >= k + ell + 1, "requires n >= k + ell + 1")
        return catalan(k) * catalan(ell)
    if fam == "theorem-004":
        need(m == 0, "m is not a parameter here")
        need(n >= k + ell + 1, "requires n >= k + ell + 1")
        return _hook_count(k, ell)
    # theorem-0004
    need(k >= 1, "requires k >= 1")
    need(n >= k + ell + m + 1, "requires n >= k + ell + m + 1")
    return _hook_count(k, ell) * _hook_count(k, m)


_CLOSED_0K0L_THRESHOLD = {(1, 0): 2, (2, 0): 4, (1, 1): 4, (2, 1): 5, (2, 2): 7}


def closed_coeff_0k0l(k: int, ell: int, n: int, r: int) -> int:
    """Coefficient of ``x^(n - 2(k+ell) + r)`` in the (0,k,0,ell) polynomial
    over 123-avoiders, for the five small families with closed formulas.

    ``r`` is the number of graph points in the corner area (0..k+ell).
    """
    if (k, ell) not in _CLOSED_0K0L_THRESHOLD:
        raise ValueError(f"no closed coefficient formula for (0,{k},0,{ell})")
    threshold = _CLOSED_0K0L_THRESHOLD[(k, ell)]
    if n < threshold:
        raise ValueError(f"(0,{k},0,{ell}) formulas require n >= {threshold}")
    if not 0 <= r <= k + ell:
        raise ValueError(f"r must lie in 0..{k + ell}")
    c = catalan
    if (k, ell) == (1, 0):
        return (c(n) - c(n - 1), c(n - 1))[r]
    if (k, ell) == (2, 0):
        return (
            c(n) - 3 * c(n - 1) + c(n - 2),
            3 * (c(n - 1) - c(n - 2)),
            2 * c(n - 2),
        )[r]
    if (k, ell) == (1, 1):
        return (
            c(n) - 2 * c(n - 1) + c(n - 2) - 2,
            2 * c(n - 1) - 2 * c(n - 2) + 2,
            c(n - 2),
        )[r]
    if (k, ell) == (2, 1):
        return (
            c(n) - 4 * c(n - 1) + 4 * c(n - 2) - c(n - 3) - 2 * n + 6,
            4 * c(n - 1) - 9 * c(n - 2) + 4 * c(n - 3) + 2 * n - 12,
            5 * c(n - 2) - 5 * c(n - 3) + 6,
            2 * c(n - 3),
        )[r]
    return (
        c(n) - 6 * c(n - 1) + 11 * c(n - 2) - 6 * c(n - 3) + c(n - 4) - 2 * n * n + 16 * n - 34,
        6 * c(n - 1) - 24 * c(n - 2) + 24 * c(n - 3) - 6 * c(n - 4) + 2 * n * n - 28 * n + 80,
        13 * c(n - 2) - 30 * c(n - 3) + 13 * c(n - 4) + 12 * n - 64,
        12 * c(n - 3) - 12 * c(n - 4) + 18,
        4 * c(n - 4),
    )[r]


def closed_poly_0k0l(k: int, ell: int, n: int) -> IntPoly:
    """Full (0,k,0,ell) polynomial at order n from the closed formulas."""
    threshold = _CLOSED_0K0L_THRESHOLD[(k, ell)]
    if n < threshold:
        raise ValueError(f"(0,{k},0,{ell}) formulas require n >= {threshold}")
    coeffs = {}
    for r in range(k + ell + 1):
        e = n - 2 * (k + ell) + r
        v = closed_coeff_0k0l(k, ell, n, r)
        if e < 0:
            if v:
                raise ArithmeticError(f"nonzero coefficient at negative exponent x^{e}")
            continue
        if v:
            coeffs[e] = v
    return IntPoly(coeffs)


# ---------------------------------------------------------------------------
# Routing for 123-avoider specs


def _numeric4(spec: QuadrantSpec) -> tuple[int, int, int, int] | None:
    if any(v is EMPTY for v in spec.coords):
        return None
    return spec.coords  # type: ignore[return-value]


def closed_series_123(spec: QuadrantSpec, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Closed-form series over 123-avoiders, where one exists.

    Covers (0,0,0,0) and the (0,k,0,l) pairs with coefficient formulas
    (either orientation).  Below each formula's validity threshold the few
    initial polynomials come from direct enumeration.
    """
    quad = _numeric4(spec)
    if quad is None or quad[0] != 0 or quad[2] != 0:
        raise NoEngineError(f"no closed form for MMP({spec}) over 123-avoiders")
    k, ell = quad[1], quad[3]
    if (k, ell) == (0, 0):
        return TSeries([IntPoly.x(n, catalan(n)) for n in range(trunc + 1)])
    if (k, ell) not in _CLOSED_0K0L_THRESHOLD:
        if (ell, k) in _CLOSED_0K0L_THRESHOLD:
            k, ell = ell, k  # reverse-complement symmetry swaps the two slots
        else:
            raise NoEngineError(f"no closed form for MMP({spec}) over 123-avoiders")
    threshold = _CLOSED_0K0L_THRESHOLD[(k, ell)]
    coeffs = []
    for n in range(trunc + 1):
        if n >= threshold:
            coeffs.append(closed_poly_0k0l(k, ell, n))
        else:
            coeffs.append(_mmp.distribution(n, P123, QuadrantSpec(0, k, 0, ell)))
    return TSeries(coeffs)


def recurrence_series_123(spec: QuadrantSpec, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Recurrence-backed series over 123-avoiders, where one exists."""
    a, b, c, d = spec.coords
    a_num = a is not EMPTY
    c_num = c is not EMPTY
    b_d_numeric = b is not EMPTY and d is not EMPTY
    if a_num and c_num and a >= 1 and c >= 1:
        # A position can never see points in both quadrants I and III here.
        return TSeries([_const(n) for n in range(trunc + 1)])
    if b_d_numeric and a_num and a >= 1 and (c is EMPTY or c == 0):
        return q132_series(QuadrantSpec(a, b, EMPTY, d), trunc)
    if b_d_numeric and c_num and c >= 1 and (a is EMPTY or a == 0):
        # rotate by the reverse-complement symmetry: (a,b,c,d) -> (c,d,a,b)
        return q132_series(QuadrantSpec(c, d, EMPTY, b), trunc)
    quad = _numeric4(spec)
    if quad is not None and quad[0] == 0 and quad[2] == 0:
        k, ell = quad[1], quad[3]
        if k == 0 or ell == 0:
            return q123_0k00(max(k, ell), trunc)
    raise NoEngineError(
        f"no recurrence engine for MMP({spec}) over 123-avoiders; "
        f"fall back to oracle.brute_series(123, ...)"
    )


def transport_123(spec: QuadrantSpec, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Series over 123-avoiders by the cheapest applicable engine.

    Preference order: closed form, then recurrence.  Specs outside every
    covered family raise NoEngineError naming the brute-force fallback.
    """
    try:
        return closed_series_123(spec, trunc)
    except NoEngineError:
        pass
    try:
        return recurrence_series_123(spec, trunc)
    except NoEngineError:
        raise NoEngineError(
            f"no engine covers MMP({spec}) over 123-avoiders; "
            f"fall back to oracle.brute_series(123, ...)"
        ) from None


# ---------------------------------------------------------------------------
# Errata: literal printed forms that diverge from the oracle


@dataclass(frozen=True)
class ErrataRecord:
    """First divergence of a stated formula, read literally, from brute force."""

    subject: str
    parameters: str
    n: int
    exponent: str
    stated_value: str
    oracle_value: str

    def line(self) -> str:
        return (
            f"{self.subject}; {self.parameters}; n={self.n},exp={self.exponent}; "
            f"{self.stated_value}; {self.oracle_value}"
        )


KNOWN_ERRATA: tuple[ErrataRecord, ...] = (
    # The x^1-agreement half of the claim is false: the stated value is the
    # x^1 coefficient predicted by the (k,l,EMPTY,m) series, the oracle value
    # is the actual x^1 coefficient of the (k,l,0,m) distribution.  Only the
    # x^0 halves agree (every counterexample below carries the details).
    ErrataRecord("theorem-3", "k=0,l=0,m=0", 2, "1", "1", "0"),
    # Missing factor t on the product term: the literal right-hand side
    # already has constant term 2.
    ErrataRecord("theorem-7", "k=1,l=1", 0, "0", "2", "1"),
    # Head sums of the displayed numerator double-count below the threshold.
    ErrataRecord("theorem-8", "k=1,l=1", 2, "0", "4", "2"),
    # Displayed peak-side formula drops the last subtracted prefix term.
    ErrataRecord("theorem-11", "k1=1,k2=0", 1, "x0^0*x1^1", "1", "0"),
    # The stated position-count formula swaps the row bounds: the value
    # clause must be l < sigma_j <= n-k, not k < sigma_j <= n-l (only the
    # former is consistent with the frame identity and the direct count).
    ErrataRecord("theorem-12", "k=0,l=1,sigma=12", 2, "-", "1", "0"),
    # Prose gives 2*C(n-2) for the top coefficient; the stated formula
    # (and the series) has 2*C(n-3).
    ErrataRecord("theorem-17", "k=2,l=1", 5, "2", "10", "4"),
)


def errata_lines() -> list[str]:
    return [r.line() for r in KNOWN_ERRATA]


def write_errata(path) -> None:
    Path(path).write_text("".join(line + "\n" for line in errata_lines()), encoding="utf-8")
