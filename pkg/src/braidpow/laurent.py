"""Laurent polynomials in one variable q over the rationals.

A Laurent polynomial is a plain dict {exponent: coefficient} with int
exponents and nonzero Fraction coefficients; the empty dict is zero.
Every function here returns that canonical form, so equality is dict
equality and the zero test is emptiness.  No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

ONE = {0: Fraction(1)}


def lconst(c) -> dict:
    c = Fraction(c)
    return {0: c} if c else {}


def lq(e: int = 1) -> dict:
    """The monomial q**e."""
    return {e: Fraction(1)}


def ladd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def lsub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def lneg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def lmul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def lscale(a: dict, c) -> dict:
    c = Fraction(c)
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def lshift(a: dict, k: int) -> dict:
    """Multiply by q**k."""
    if not k:
        return dict(a)
    return {e + k: c for e, c in a.items()}


def ldeg(a: dict) -> int:
    """Top exponent; raises on the zero polynomial."""
    if not a:
        raise ValueError("zero polynomial has no degree")
    return max(a)


def lqshift(a: dict, k: int, q0=None) -> dict:
    """Multiply by q**k, with q pinned to q0 when given.  Specialized
    coefficients stay constant Laurents this way."""
    if q0 is None:
        return lshift(a, k)
    return lscale(a, Fraction(q0) ** k) if k else dict(a)


def lpow(a: dict, n: int) -> dict:
    out = dict(ONE)
    for _ in range(n):
        out = lmul(out, a)
    return out


def lbar(a: dict) -> dict:
    """The substitution q -> q**-1."""
    return {-e: c for e, c in a.items()}


def leval(a: dict, q0) -> Fraction:
    q0 = Fraction(q0)
    if not q0:
        raise ZeroDivisionError("cannot evaluate a Laurent polynomial at q = 0")
    return sum((c * q0**e for e, c in a.items()), Fraction(0))


def lqint(k: int, d: int = 1) -> dict:
    """Balanced q-integer (k) = (q**(k*d) - q**(-k*d)) / (q**d - q**(-d))."""
    if k < 0:
        return lneg(lqint(-k, d))
    return {d * (k - 1 - 2 * j): Fraction(1) for j in range(k)}


def lqfact(k: int, d: int = 1) -> dict:
    out = dict(ONE)
    for j in range(2, k + 1):
        out = lmul(out, lqint(j, d))
    return out


def lcontent(a: dict) -> Fraction:
    """Positive rational c with a/c having coprime integer coefficients."""
    if not a:
        return Fraction(0)
    num, den = 0, 1
    for c in a.values():
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    return Fraction(num, den)


def lprimitive(a: dict) -> tuple[Fraction, dict]:
    """Split a as (c, p) with a == c*p, p integral, coprime, positive leading
    coefficient.  The q-power factor is left in place."""
    if not a:
        return Fraction(0), {}
    c = lcontent(a)
    if a[max(a)] < 0:
        c = -c
    return c, {e: v / c for e, v in a.items()}


def _divmod_poly(a: dict, b: dict) -> tuple[dict, dict]:
    # ordinary long division; requires min exponents >= 0 and b != 0
    r = dict(a)
    quot = {}
    db = max(b)
    lb = b[db]
    while r:
        dr = max(r)
        if dr < db:
            break
        c = r[dr] / lb
        e = dr - db
        quot[e] = c
        for eb, cb in b.items():
            ee = eb + e
            s = r.get(ee, 0) - c * cb
            if s:
                r[ee] = s
            else:
                r.pop(ee, None)
    return quot, r


def ldiv_exact(a: dict, b: dict) -> dict:
    """Exact quotient a/b; raises ValueError if b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    sa, sb = min(a), min(b)
    q, r = _divmod_poly(lshift(a, -sa), lshift(b, -sb))
    if r:
        raise ValueError("inexact polynomial division")
    return lshift(q, sa - sb)


def lgcd(a: dict, b: dict) -> dict:
    """gcd up to units: primitive, integer, positive leading coefficient,
    lowest exponent 0.  lgcd(a, {}) is the unit-normalized form of a."""
    x = lshift(a, -min(a)) if a else {}
    y = lshift(b, -min(b)) if b else {}
    _, x = lprimitive(x)
    _, y = lprimitive(y)
    while y:
        if not x or max(x) < max(y):
            x, y = y, x
            continue
        _, r = _divmod_poly(x, y)
        _, r = lprimitive(r)
        if r:
            r = lshift(r, -min(r))
        x, y = y, r
    return x


def llcm(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    g = lgcd(a, b)
    return ldiv_exact(lmul(a, b), g)


def lformat(a: dict) -> str:
    """Human-readable form, highest exponent first, e.g. 'q^2 + 1 + q^-2'."""
    if not a:
        return "0"
    parts = []
    for e in sorted(a, reverse=True):
        c = a[e]
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if e == 0:
            body = str(mag)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
