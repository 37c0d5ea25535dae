"""Closed-form spectral bounds and the named polynomial families.

This module houses the cubic/quartic/quintic polynomials whose largest
roots equal the spectral radii of the small extremal families (the
f/g/h machinery), together with the closed-form comparison bounds
(square roots and the golden-ratio-like thresholds).

Two of the printed quartics (Eq9h1, Eq9h3) and the printed difference
cubic (SubcaseH) disagree with direct symbolic recomputation from the
underlying quotient matrices.  Both forms are kept: the recomputed form
is authoritative and is the default, the printed form is available under
``variant="printed"`` and carries a structured :class:`Discrepancy`
record.  The quintic Eq9h2 exists only in printed form; its x^4
coefficient forces a matrix trace of -1, which no adjacency quotient
can attain, so every instantiation carries a discrepancy.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import intpoly as ip

VARIANT_PRINTED = "printed"
VARIANT_RECOMPUTED = "recomputed"

DEFAULT_ROOT_TOL = Fraction(1, 10**12)


class BoundsError(ValueError):
    """Bad parameters for a polynomial or bound factory."""


class DiscrepancyWarning(UserWarning):
    """A printed polynomial form that disagrees with recomputation is in use."""


@dataclass(frozen=True)
class Discrepancy:
    """Record of a printed-vs-recomputed coefficient mismatch.

    Attributes
    ----------
    name : str
        Polynomial family name.
    printed : tuple
        Ascending coefficients of the printed form.
    recomputed : tuple or None
        Ascending coefficients of the recomputed form; None when no
        consistent recomputation exists.
    detail : str
        Human-readable description of the mismatch.
    """

    name: str
    printed: tuple
    recomputed: Optional[tuple]
    detail: str

    def to_json(self):
        return {
            "name": self.name,
            "printed": list(self.printed),
            "recomputed": None if self.recomputed is None else list(self.recomputed),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class PolySpec:
    """A named integer polynomial with its parameters.

    Coefficients are ascending, so ``coeffs[i]`` multiplies x**i.
    """

    name: str
    params: tuple
    coeffs: tuple
    variant: str = VARIANT_RECOMPUTED
    discrepancy: Optional[Discrepancy] = None

    def display(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.name}({inner})"

    def evaluate(self, x):
        return ip.evaluate(self.coeffs, x)

    def to_json(self):
        out = {
            "name": self.name,
            "params": dict(self.params),
            "coeffs": list(self.coeffs),
            "order": "ascending",
            "variant": self.variant,
        }
        if self.discrepancy is not None:
            out["discrepancy"] = self.discrepancy.to_json()
        return out


@dataclass(frozen=True)
class Bound:
    """A closed-form threshold value, stored exactly as a quadratic surd."""

    name: str
    params: tuple
    value: ip.Surd

    def display(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.name}({inner})"

    def __float__(self):
        return float(self.value)

    def to_json(self):
        return {
            "name": self.name,
            "params": dict(self.params),
            "value": float(self.value),
            "exact": str(self.value),
        }


def _require_int(name, value):
    if not isinstance(value, int) or isinstance(value, bool):
        raise BoundsError(f"{name} must be an integer, got {value!r}")
    return value


def lemma22(m, k):
    """Cubic x^3 - x^2 - (m-k)x + (m-3k).

    Its largest root is the spectral radius of the star K_{1,m-k} with k
    extra disjoint edges among the leaves.
    """
    _require_int("m", m)
    _require_int("k", k)
    if k < 0 or m < 1:
        raise BoundsError(f"need m >= 1 and k >= 0, got m={m}, k={k}")
    coeffs = (m - 3 * k, -(m - k), -1, 1)
    return PolySpec("Lemma22", (("m", m), ("k", k)), coeffs)


def g10_g(m):
    """Quartic x^4 - mx^2 - 2x + 2m - 7 for the hub-edge-pendant graph G10."""
    _require_int("m", m)
    coeffs = (2 * m - 7, -2, -m, 0, 1)
    return PolySpec("G10g", (("m", m),), coeffs)


def subcase_h(m, variant=VARIANT_RECOMPUTED):
    """Difference cubic h = g - x f with f = lemma22(m, 2).

    The printed form has linear coefficient -(m-8); direct subtraction
    gives -(m-4).  The recomputed form is the default.
    """
    _require_int("m", m)
    printed = (2 * m - 7, -(m - 8), -2, 1)
    recomputed = ip.sub_x_times(g10_g(m).coeffs, lemma22(m, 2).coeffs)
    assert recomputed == (2 * m - 7, -(m - 4), -2, 1)
    disc = Discrepancy(
        "SubcaseH",
        printed,
        recomputed,
        "printed linear coefficient -(m-8) vs recomputed -(m-4) in g - x*f",
    )
    return _pick("SubcaseH", (("m", m),), printed, recomputed, variant, disc)


def eq9_h1(m, variant=VARIANT_RECOMPUTED):
    """Quartic for C5 with a star identified at one cycle vertex.

    The printed form x^4 - x^3 - (m-2)x^2 - (m-3)x + (m-5) has the sign
    of the linear term flipped; the characteristic polynomial of the
    actual 4-cell quotient carries +(m-3)x.
    """
    _require_int("m", m)
    printed = (m - 5, -(m - 3), -(m - 2), -1, 1)
    recomputed = (m - 5, m - 3, -(m - 2), -1, 1)
    disc = Discrepancy(
        "Eq9h1",
        printed,
        recomputed,
        "printed linear coefficient -(m-3) vs recomputed +(m-3); "
        "only the recomputed quartic divides the characteristic polynomial "
        "of the pentagon-with-star graph",
    )
    return _pick("Eq9h1", (("m", m),), printed, recomputed, variant, disc)


def eq9_h2(m):
    """Printed quintic x^5 + x^4 - (m-1)x^3 + x^2 + (3m-15)x + 3m - 17.

    Only the printed form exists: its x^4 coefficient +1 would force an
    adjacency quotient matrix of trace -1, which is impossible since
    diagonal entries count edges inside cells and are nonnegative.  No
    graph on file realizes it.
    """
    _require_int("m", m)
    printed = (3 * m - 17, 3 * m - 15, 1, -(m - 1), 1, 1)
    disc = Discrepancy(
        "Eq9h2",
        printed,
        None,
        "x^4 coefficient +1 forces quotient trace -1; no adjacency quotient "
        "matrix has negative trace, so no recomputed form exists",
    )
    warnings.warn(
        "Eq9h2 is printed-only and cannot be the characteristic polynomial "
        "of any adjacency quotient (trace -1)",
        DiscrepancyWarning,
        stacklevel=2,
    )
    return PolySpec("Eq9h2", (("m", m),), printed, VARIANT_PRINTED, disc)


def eq9_h3(m, variant=VARIANT_RECOMPUTED):
    """Quartic for the pendant-triangle graph.

    The printed linear coefficient -(m-4) disagrees with the quotient
    recomputation +(m-3); the recomputed quartic divides the
    characteristic polynomial of the graph with a triangle hung on one
    neighbor of the hub.
    """
    _require_int("m", m)
    printed = (2 * m - 8, -(m - 4), -(m - 1), -1, 1)
    recomputed = (2 * m - 8, m - 3, -(m - 1), -1, 1)
    disc = Discrepancy(
        "Eq9h3",
        printed,
        recomputed,
        "printed linear coefficient -(m-4) vs recomputed +(m-3)",
    )
    return _pick("Eq9h3", (("m", m),), printed, recomputed, variant, disc)


def lemma47_f(m, t):
    """Quartic x^4 - mx^2 - (m-t-1)x + t(m-t-1)/2.

    The constant term must be an integer, so t(m-t-1) must be even; with
    m even this forces t odd.
    """
    _require_int("m", m)
    _require_int("t", t)
    if t < 0 or m < t + 1:
        raise BoundsError(f"need 0 <= t <= m-1, got m={m}, t={t}")
    prod = t * (m - t - 1)
    if prod % 2 != 0:
        raise BoundsError(
            f"t(m-t-1) = {prod} is odd, so the constant term is not an "
            f"integer; with m even this requires t odd (m={m}, t={t})"
        )
    coeffs = (prod // 2, -(m - t - 1), -m, 0, 1)
    return PolySpec("Lemma47f", (("m", m), ("t", t)), coeffs)


def _pick(name, params, printed, recomputed, variant, disc):
    if variant == VARIANT_RECOMPUTED:
        return PolySpec(name, params, tuple(recomputed), variant, disc)
    if variant == VARIANT_PRINTED:
        warnings.warn(
            f"{name} printed form in use: {disc.detail}",
            DiscrepancyWarning,
            stacklevel=3,
        )
        return PolySpec(name, params, tuple(printed), variant, disc)
    raise BoundsError(f"unknown variant {variant!r}")


_POLY_FACTORIES = {
    "Lemma22": lemma22,
    "G10g": g10_g,
    "SubcaseH": subcase_h,
    "Eq9h1": eq9_h1,
    "Eq9h2": eq9_h2,
    "Eq9h3": eq9_h3,
    "Lemma47f": lemma47_f,
}


def make_poly(name, m=None, k=None, t=None, variant=None):
    """Build a PolySpec by name, passing only the parameters it takes."""
    try:
        factory = _POLY_FACTORIES[name]
    except KeyError:
        known = ", ".join(sorted(_POLY_FACTORIES))
        raise BoundsError(f"unknown polynomial {name!r}; known: {known}") from None
    if name == "Lemma22":
        kwargs = {"m": m, "k": k}
    elif name == "Lemma47f":
        kwargs = {"m": m, "t": t}
    else:
        kwargs = {"m": m}
    missing = [key for key, val in kwargs.items() if val is None]
    if missing:
        raise BoundsError(f"{name} requires {', '.join(missing)}")
    if variant is not None:
        if name in ("SubcaseH", "Eq9h1", "Eq9h3"):
            kwargs["variant"] = variant
        elif name == "Eq9h2":
            if variant != VARIANT_PRINTED:
                raise BoundsError("Eq9h2 exists only in printed form")
        elif variant != VARIANT_RECOMPUTED:
            raise BoundsError(f"{name} has a single form; no variant {variant!r}")
    return factory(**kwargs)


def sqrt_m(m):
    """The triangle threshold sqrt(m)."""
    _require_int("m", m)
    if m < 1:
        raise BoundsError(f"need m >= 1, got {m}")
    return Bound("SqrtM", (("m", m),), ip.Surd.sqrt(m))


def sqrt_m_minus(m, c):
    """The shifted threshold sqrt(m - c)."""
    _require_int("m", m)
    _require_int("c", c)
    if m - c < 0:
        raise BoundsError(f"need m - c >= 0, got m={m}, c={c}")
    return Bound("SqrtMminus", (("m", m), ("c", c)), ip.Surd.sqrt(m - c))


def nosal_like(m):
    """The non-bipartite triangle threshold sqrt(m - 1)."""
    _require_int("m", m)
    if m < 1:
        raise BoundsError(f"need m >= 1, got {m}")
    return Bound("NosalLike", (("m", m),), ip.Surd.sqrt(m - 1))


def golden43(m):
    """The quadrilateral threshold (1 + sqrt(4m - 3)) / 2."""
    _require_int("m", m)
    if m < 1:
        raise BoundsError(f"need m >= 1, got {m}")
    return Bound(
        "Golden43",
        (("m", m),),
        ip.Surd(Fraction(1, 2), Fraction(1, 2), 4 * m - 3),
    )


def golden45(m):
    """The pentagon-with-chord threshold (1 + sqrt(4m - 5)) / 2."""
    _require_int("m", m)
    if m < 2:
        raise BoundsError(f"need m >= 2, got {m}")
    return Bound(
        "Golden45",
        (("m", m),),
        ip.Surd(Fraction(1, 2), Fraction(1, 2), 4 * m - 5),
    )


_BOUND_FACTORIES = {
    "SqrtM": sqrt_m,
    "SqrtMminus": sqrt_m_minus,
    "NosalLike": nosal_like,
    "Golden43": golden43,
    "Golden45": golden45,
}


def make_bound(name, m=None, c=None):
    """Build a Bound by name."""
    try:
        factory = _BOUND_FACTORIES[name]
    except KeyError:
        known = ", ".join(sorted(_BOUND_FACTORIES))
        raise BoundsError(f"unknown bound {name!r}; known: {known}") from None
    if m is None:
        raise BoundsError(f"{name} requires m")
    if name == "SqrtMminus":
        if c is None:
            raise BoundsError("SqrtMminus requires c")
        return factory(m, c)
    return factory(m)


def bound_value(b):
    """Exact value of a bound as a quadratic surd."""
    return b.value


def _coeffs_of(p):
    if isinstance(p, PolySpec):
        return p.coeffs
    return ip.trim(tuple(p))


def largest_root(p, tol=DEFAULT_ROOT_TOL):
    """Certified bracket around the largest real root of p.

    Parameters
    ----------
    p : PolySpec or coefficient sequence
    tol : Fraction or float
        Maximum bracket width.

    Returns
    -------
    RootBracket
        Exact rational bracket (lo, hi] with sign-agreed endpoints,
        width at most tol.

    Raises
    ------
    NoRealRootError
        If p has no real root.
    """
    if not isinstance(tol, Fraction):
        tol = Fraction(tol)
    if tol <= 0:
        raise BoundsError(f"tol must be positive, got {tol}")
    return ip.largest_root_bracket(_coeffs_of(p), tol=tol)


def combine(p, q, op):
    """Exact symbolic combination of two polynomials.

    op = "sub" computes p - q; op = "sub_x_times" computes p - x*q.
    """
    a, b = _coeffs_of(p), _coeffs_of(q)
    if op == "sub":
        return ip.sub(a, b)
    if op == "sub_x_times":
        return ip.sub_x_times(a, b)
    raise BoundsError(f"unknown op {op!r}; expected 'sub' or 'sub_x_times'")
