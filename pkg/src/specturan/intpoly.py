"""Exact polynomial arithmetic and certified real-root location.

Polynomials are tuples of coefficients in ascending degree order: index
``i`` holds the coefficient of ``x**i``.  Coefficients are Python ints or
:class:`fractions.Fraction`; nothing in this module touches floating
point, so every bracket, count, and comparison produced here is a proof,
not an estimate.

The certified toolkit is built from Sturm chains over the rationals:
root counting by sign variations, isolation of the largest real root,
dyadic bisection down to a requested width, and exact comparison of
largest roots of two polynomials (including detecting exact equality via
a gcd witness).  :class:`Surd` supplies exact arithmetic and sign
determination in the quadratic field Q(sqrt(d)) so closed-form values
like (1 + sqrt(4m-3))/2 can be compared against algebraic roots without
rounding.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class NoRealRootError(ValueError):
    """Raised when a largest real root is requested but none exists."""


# ---------------------------------------------------------------------------
# basic arithmetic
# ---------------------------------------------------------------------------


def trim(coeffs):
    """Return ``coeffs`` as a tuple with trailing zero coefficients removed."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(p):
    """Degree of ``p``; the zero polynomial has degree -1."""
    p = trim(p)
    return len(p) - 1


def is_zero(p):
    return not trim(p)


def leading(p):
    p = trim(p)
    if not p:
        raise ValueError("zero polynomial has no leading coefficient")
    return p[-1]


def evaluate(p, x):
    """Evaluate ``p`` at ``x`` by Horner's rule.

    ``x`` may be an int, a Fraction, a float, or a :class:`Surd`; the
    result has the corresponding arithmetic type.
    """
    acc = 0
    for c in reversed(trim(p)):
        acc = acc * x + c
    return acc


def add(p, q):
    n = max(len(p), len(q))
    return trim(tuple((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)))


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    if c == 0:
        return ()
    return trim(tuple(c * a for a in p))


def mul(p, q):
    p, q = trim(p), trim(q)
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(tuple(out))


def sub_x_times(p, q):
    """Return ``p - x*q`` exactly."""
    shifted = (0,) + tuple(q)
    return sub(p, shifted)


def derivative(p):
    p = trim(p)
    return trim(tuple(i * p[i] for i in range(1, len(p))))


def divmod_exact(p, q):
    """Polynomial division over the rationals; returns ``(quotient, remainder)``."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in trim(p)]
    lead = Fraction(q[-1])
    dq = len(q) - 1
    quo = [Fraction(0)] * max(len(rem) - dq, 0)
    while len(rem) - 1 >= dq and rem:
        factor = rem[-1] / lead
        pos = len(rem) - 1 - dq
        quo[pos] = factor
        for i in range(len(q)):
            rem[pos + i] -= factor * q[i]
        while rem and rem[-1] == 0:
            rem.pop()
    return trim(tuple(quo)), trim(tuple(rem))


def divides(q, p):
    """True when ``q`` divides ``p`` exactly over the rationals."""
    if is_zero(q):
        return is_zero(p)
    _, rem = divmod_exact(p, q)
    return is_zero(rem)


def content(p):
    """Positive gcd of the numerators over the lcm of denominators.

    For an integer polynomial this is the usual content; for rational
    coefficients it is the positive rational c such that p/c is a
    primitive integer polynomial.
    """
    p = trim(p)
    if not p:
        return Fraction(0)
    fracs = [Fraction(c) for c in p]
    num_gcd = 0
    den_lcm = 1
    for f in fracs:
        num_gcd = math.gcd(num_gcd, abs(f.numerator))
        den_lcm = den_lcm * f.denominator // math.gcd(den_lcm, f.denominator)
    return Fraction(num_gcd, den_lcm)


def primitive(p):
    """Primitive integer form of ``p`` with positive leading coefficient."""
    p = trim(p)
    if not p:
        return ()
    c = content(p)
    out = tuple(int(Fraction(a) / c) for a in p)
    if out[-1] < 0:
        out = tuple(-a for a in out)
    return out


def to_int_coeffs(p):
    """Coerce exactly-integer rational coefficients to ints; error otherwise."""
    out = []
    for c in trim(p):
        f = Fraction(c)
        if f.denominator != 1:
            raise ValueError(f"coefficient {c} is not an integer")
        out.append(f.numerator)
    return tuple(out)


def poly_gcd(p, q):
    """Primitive integer gcd of ``p`` and ``q`` (positive leading coefficient)."""
    a, b = trim(p), trim(q)
    if is_zero(a):
        return primitive(b)
    if is_zero(b):
        return primitive(a)
    while not is_zero(b):
        _, r = divmod_exact(a, b)
        a, b = b, r
    return primitive(a)


def squarefree(p):
    """Squarefree part ``p / gcd(p, p')`` as a primitive integer polynomial."""
    p = trim(p)
    if degree(p) <= 0:
        return primitive(p)
    g = poly_gcd(p, derivative(p))
    if degree(g) == 0:
        return primitive(p)
    quo, rem = divmod_exact(p, g)
    assert is_zero(rem)
    return primitive(quo)


def format_poly(p, var="x"):
    """Human-readable form like ``x^3 - x^2 - 7*x + 3`` (highest degree first)."""
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = f"{mag}"
        elif i == 1:
            body = f"{var}" if mag == 1 else f"{mag}*{var}"
        else:
            body = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# ---------------------------------------------------------------------------
# quadratic surds
# ---------------------------------------------------------------------------


def _split_square(d):
    """Write d = s*s*d0 with d0 squarefree; returns (s, d0)."""
    s, d0 = 1, d
    f = 2
    while f * f <= d0:
        while d0 % (f * f) == 0:
            d0 //= f * f
            s *= f
        f += 1
    return s, d0


@dataclass(frozen=True)
class Surd:
    """Exact value ``a + b*sqrt(d)`` with rational a, b and squarefree d >= 0.

    Construction normalises the representation (square parts of d are
    folded into b, and b == 0 forces d == 0), so equality and hashing on
    the fields coincide with equality of values.  Arithmetic stays inside
    one quadratic field: combining two surds with different nonzero
    radicands raises ``ValueError``.
    """

    a: Fraction
    b: Fraction
    d: int

    def __init__(self, a, b=0, d=0):
        a, b = Fraction(a), Fraction(b)
        d = int(d)
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if b == 0 or d == 0:
            a, b, d = a + (b * 0), Fraction(0), 0
        else:
            s, d0 = _split_square(d)
            b *= s
            d = d0
            if d == 1:
                a += b
                b, d = Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, x):
        """Exact square root of a nonnegative rational."""
        x = Fraction(x)
        if x < 0:
            raise ValueError("square root of a negative rational")
        return cls(0, Fraction(1, x.denominator), x.numerator * x.denominator)

    def _coerce(self, other):
        if isinstance(other, Surd):
            return other
        if isinstance(other, Rational):
            return Surd(other)
        return NotImplemented

    def _join_d(self, other):
        if self.d and other.d and self.d != other.d:
            raise ValueError(f"incompatible radicands {self.d} and {other.d}")
        return self.d or other.d

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_d(other)
        return Surd(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_d(other)
        # (a1 + b1 r)(a2 + b2 r) with r*r = d
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return Surd(a, b, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_d(other)
        norm = other.a * other.a - other.b * other.b * d
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        conj = Surd(other.a, -other.b, other.d)
        num = self * conj
        return Surd(num.a / norm, num.b / norm, num.d)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def sign(self):
        """Exact sign of the value: -1, 0, or +1."""
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return -1 if a < 0 else (1 if a > 0 else 0)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare |a| against |b|*sqrt(d) via squares
        lhs, rhs = a * a, b * b * d
        if lhs == rhs:
            return 0
        bigger_rational = lhs > rhs
        if a > 0:
            return 1 if bigger_rational else -1
        return -1 if bigger_rational else 1

    def _cmp(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __eq__(self, other):
        if isinstance(other, (Surd, Rational)):
            return self._cmp(other) == 0
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        if self.b == 0:
            return f"Surd({self.a})"
        return f"Surd({self.a} + {self.b}*sqrt({self.d}))"


def _sign_of(value):
    """Exact sign of an int, Fraction, or Surd."""
    if isinstance(value, Surd):
        return value.sign()
    return -1 if value < 0 else (1 if value > 0 else 0)


# ---------------------------------------------------------------------------
# Sturm chains and certified root location
# ---------------------------------------------------------------------------


def sturm_chain(p):
    """Sturm chain of the squarefree part of ``p``, primitive at every step.

    Rescaling each remainder by a positive rational keeps the chain in
    small integers without affecting sign variations.
    """
    p0 = squarefree(p)
    if degree(p0) < 1:
        return [p0] if not is_zero(p0) else []
    chain = [p0, primitive(derivative(p0))]
    while degree(chain[-1]) >= 1:
        _, rem = divmod_exact(chain[-2], chain[-1])
        if is_zero(rem):
            break
        # next element is -rem rescaled by a positive rational; primitive()
        # always returns a positive leading coefficient, so flip when rem had one
        nxt = primitive(rem)
        if leading(rem) > 0:
            nxt = neg(nxt)
        chain.append(nxt)
    return chain


def _chain_signs_at(chain, x):
    return [_sign_of(evaluate(q, x)) for q in chain]


def _chain_signs_at_inf(chain, positive=True):
    signs = []
    for q in chain:
        q = trim(q)
        s = _sign_of(q[-1]) if q else 0
        if not positive and (len(q) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return signs


def _variations(signs):
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def variations_at(chain, x):
    """Sign variations of the chain at ``x`` (exact rational or surd)."""
    return _variations(_chain_signs_at(chain, x))


def count_roots_between(chain, a, b):
    """Number of distinct real roots in the half-open interval ``(a, b]``."""
    return variations_at(chain, a) - variations_at(chain, b)


def count_roots_above(p, s, chain=None):
    """Number of distinct real roots of ``p`` strictly greater than ``s``."""
    chain = chain if chain is not None else sturm_chain(p)
    if not chain:
        return 0
    return variations_at(chain, s) - _variations(_chain_signs_at_inf(chain, positive=True))


def count_real_roots(p, chain=None):
    """Number of distinct real roots of ``p``."""
    chain = chain if chain is not None else sturm_chain(p)
    if not chain or degree(chain[0]) < 1:
        return 0
    neg_inf = _variations(_chain_signs_at_inf(chain, positive=False))
    pos_inf = _variations(_chain_signs_at_inf(chain, positive=True))
    return neg_inf - pos_inf


def cauchy_bound(p):
    """Fraction B with every real root of ``p`` strictly inside (-B, B)."""
    p = trim(p)
    if degree(p) < 1:
        raise ValueError("root bound of a constant polynomial")
    lead = abs(Fraction(p[-1]))
    biggest = max(abs(Fraction(c)) for c in p[:-1]) if len(p) > 1 else Fraction(0)
    return Fraction(1) + biggest / lead


@dataclass(frozen=True)
class RootBracket:
    """Certified bracket ``lo < root <= hi`` around the largest real root of ``poly``.

    ``poly`` is the squarefree primitive integer form; the interval
    contains exactly one of its roots and no root lies above ``hi``.
    """

    poly: tuple
    lo: Fraction
    hi: Fraction

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.mid)

    def refined(self, tol):
        """Shrink the bracket by sign bisection until ``width <= tol``."""
        tol = Fraction(tol)
        lo, hi = self.lo, self.hi
        sign_lo = _sign_of(evaluate(self.poly, lo))
        while hi - lo > tol:
            mid = (lo + hi) / 2
            s = _sign_of(evaluate(self.poly, mid))
            if s == 0:
                # exact hit: keep the root at the top endpoint of a tiny interval
                lo, hi = mid - min(tol, hi - lo) / 4, mid
                break
            if s == sign_lo:
                lo = mid
            else:
                hi = mid
        return RootBracket(self.poly, lo, hi)

    def split_once(self):
        """One bisection step; exact hits collapse toward the root."""
        mid = (self.lo + self.hi) / 2
        s = _sign_of(evaluate(self.poly, mid))
        if s == 0:
            quarter = (self.hi - self.lo) / 4
            return RootBracket(self.poly, mid - quarter, mid)
        if s == _sign_of(evaluate(self.poly, self.lo)):
            return RootBracket(self.poly, mid, self.hi)
        return RootBracket(self.poly, self.lo, mid)

    def to_json(self):
        return {
            "lo": str(self.lo),
            "hi": str(self.hi),
            "lo_float": float(self.lo),
            "hi_float": float(self.hi),
        }


def largest_root_bracket(p, tol=None):
    """Certified bracket around the largest real root of ``p``.

    Raises :class:`NoRealRootError` when ``p`` has no real root.  With
    ``tol`` given, the bracket is refined to that width.
    """
    chain = sturm_chain(p)
    if not chain or degree(chain[0]) < 1:
        raise NoRealRootError("polynomial has no real roots")
    sf = chain[0]
    bound = cauchy_bound(sf)
    lo, hi = -bound, bound
    if count_roots_between(chain, lo, hi) < 1:
        raise NoRealRootError("polynomial has no real roots")
    # shrink until exactly the largest root remains in (lo, hi]
    while count_roots_between(chain, lo, hi) > 1:
        mid = (lo + hi) / 2
        if count_roots_between(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    # sign bisection needs sf(lo) != 0; lo could still sit on a smaller root
    while _sign_of(evaluate(sf, lo)) == 0:
        mid = (lo + hi) / 2
        if count_roots_between(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    bracket = RootBracket(sf, lo, hi)
    if tol is not None:
        bracket = bracket.refined(tol)
    return bracket


def compare_root_to(p, s, chain=None):
    """Compare the largest real root of ``p`` against the exact value ``s``.

    Returns -1, 0, or +1.  ``s`` may be an int, Fraction, or Surd.
    """
    chain = chain if chain is not None else sturm_chain(p)
    if not chain or degree(chain[0]) < 1 or count_real_roots(chain[0], chain) == 0:
        raise NoRealRootError("polynomial has no real roots")
    if count_roots_above(chain[0], s, chain) >= 1:
        return 1
    return 0 if _sign_of(evaluate(chain[0], s)) == 0 else -1


def compare_largest_roots(p, q):
    """Compare largest real roots of ``p`` and ``q``: -1, 0, or +1.

    Equality is certified by locating a root of gcd(p, q) inside the
    intersection of the two isolating intervals; inequality is certified
    by refining the brackets until they separate.
    """
    bp = largest_root_bracket(p)
    bq = largest_root_bracket(q)
    g = poly_gcd(bp.poly, bq.poly)
    chain_g = sturm_chain(g) if degree(g) >= 1 else None
    while True:
        if bp.hi <= bq.lo:
            return -1
        if bq.hi <= bp.lo:
            return 1
        if chain_g is not None:
            a = max(bp.lo, bq.lo)
            b = min(bp.hi, bq.hi)
            if a < b and count_roots_between(chain_g, a, b) >= 1:
                return 0
        bp = bp.split_once()
        bq = bq.split_once()


# ---------------------------------------------------------------------------
# integer matrices: determinant and characteristic polynomial
# ---------------------------------------------------------------------------


def bareiss_det(matrix):
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def charpoly_int(matrix):
    """Characteristic polynomial det(xI - A) of an integer matrix.

    Faddeev-LeVerrier recurrence; every division is exact.  Returns
    ascending coefficients with leading coefficient 1.
    """
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return (1,)
    cs = [0] * (n + 1)
    cs[n] = 1
    m_cur = [row[:] for row in a]
    c_prev = -sum(m_cur[i][i] for i in range(n))
    cs[n - 1] = c_prev
    for k in range(2, n + 1):
        for i in range(n):
            m_cur[i][i] += c_prev
        nxt = [[sum(a[i][t] * m_cur[t][j] for t in range(n) if a[i][t]) for j in range(n)] for i in range(n)]
        m_cur = nxt
        trace = sum(m_cur[i][i] for i in range(n))
        assert trace % k == 0
        c_prev = -trace // k
        cs[n - k] = c_prev
    return tuple(cs)


def charpoly_adjacency(masks):
    """Characteristic polynomial of a 0/1 adjacency given as neighbor bitmasks.

    ``masks[i]`` has bit j set when i ~ j.  Equivalent to
    :func:`charpoly_int` on the dense matrix but row sums replace the
    inner products, which is markedly faster for sparse graphs.
    """
    n = len(masks)
    if n == 0:
        return (1,)
    cs = [0] * (n + 1)
    cs[n] = 1
    # M_1 = A
    m_cur = []
    for i in range(n):
        row = [0] * n
        mask = masks[i]
        while mask:
            j = (mask & -mask).bit_length() - 1
            row[j] = 1
            mask &= mask - 1
        m_cur.append(row)
    c_prev = 0
    cs[n - 1] = 0  # adjacency trace is zero
    for k in range(2, n + 1):
        for i in range(n):
            m_cur[i][i] += c_prev
        nxt = []
        for i in range(n):
            acc = [0] * n
            mask = masks[i]
            while mask:
                t = (mask & -mask).bit_length() - 1
                row_t = m_cur[t]
                for j in range(n):
                    acc[j] += row_t[j]
                mask &= mask - 1
            nxt.append(acc)
        m_cur = nxt
        trace = sum(m_cur[i][i] for i in range(n))
        assert trace % k == 0
        c_prev = -trace // k
        cs[n - k] = c_prev
    return tuple(cs)
