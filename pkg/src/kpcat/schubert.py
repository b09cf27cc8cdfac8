"""
Multivariate (Laurent) polynomials with integer coefficients, divided
differences, Schubert polynomials, and the coinvariant ring H_n stored in
the Schubert basis.

>>> str(schubert_poly(Permutation.parse("321"), 3))
'x1^2*x2'
>>> str(schubert_poly(Permutation.parse("132"), 3))
'x1 + x2'
"""

from __future__ import annotations

import threading
from typing import Iterable, Mapping

from .perm import (Permutation, all_perms, multiply, perm_from_code, prec,
                   simple, w0)

__all__ = [
    "Poly", "HnElement", "divided_difference", "schubert_poly",
    "schubert_expand", "reduce_Hn", "iota_Hn", "iota_poly", "cauchy_product",
    "specialize_ones", "hn_mul", "hn_to_poly", "ExpansionError",
    "poly_to_json", "poly_from_json",
]


class ExpansionError(RuntimeError):
    """Raised when Schubert expansion fails to terminate (an ordering bug)."""


class Poly:
    """A sparse polynomial in ``nvars`` variables.

    Exponents may be negative (characters of twisted duals are Laurent
    polynomials).  Zero coefficients are never stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(a) for a in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                c = int(c)
                if c:
                    self.terms[e] = self.terms.get(e, 0) + c
                    if not self.terms[e]:
                        del self.terms[e]

    @classmethod
    def const(cls, nvars: int, c: int = 1) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        """The variable ``x_i`` (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exp, c: int = 1) -> "Poly":
        return cls(len(exp), {tuple(exp): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.nvars, other)
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _coerce(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly.const(self.nvars, other)
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def evaluate(self, point) -> int:
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, a in zip(point, e):
                t *= x ** a
            total += t
        return total

    def shift(self, exp) -> "Poly":
        """Multiply by the monomial ``x^exp``."""
        return Poly(self.nvars, {tuple(a + b for a, b in zip(e, exp)): c
                                 for e, c in self.terms.items()})

    def extend(self, nvars: int) -> "Poly":
        """The same polynomial viewed in more variables (or fewer, if unused)."""
        out = {}
        for e, c in self.terms.items():
            if nvars < self.nvars and any(e[nvars:]):
                raise ValueError("polynomial uses variables beyond the new range")
            out[(e + (0,) * nvars)[:nvars]] = c
        return Poly(nvars, out)

    def min_exponent(self) -> int:
        return min((a for e in self.terms for a in e), default=0)

    def coefficient(self, exp) -> int:
        return self.terms.get(tuple(exp), 0)

    def sorted_terms(self) -> list:
        """Terms with exponents in decreasing lexicographic order."""
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}"
                for i, a in enumerate(e) if a
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self.nvars}, {str(self)!r})"


def _dd_monomial(e, i):
    # (x^e - s_i x^e) / (x_i - x_{i+1}); i is 0-based here
    a, b = e[i], e[i + 1]
    if a == b:
        return {}
    sign = 1
    if a < b:
        a, b = b, a
        sign = -1
    out = {}
    for k in range(a - b):
        f = list(e)
        f[i] = b + k
        f[i + 1] = a - 1 - k
        out[tuple(f)] = sign
    return out


def divided_difference(f: Poly, i: int) -> Poly:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed term by term."""
    if not 1 <= i < f.nvars:
        raise ValueError(f"divided difference index {i} outside 1..{f.nvars - 1}")
    out: dict = {}
    for e, c in f.terms.items():
        for g, s in _dd_monomial(e, i - 1).items():
            out[g] = out.get(g, 0) + s * c
    return Poly(f.nvars, out)


# ---------------------------------------------------------------------------
# Schubert polynomials

_SCHUB_CACHE: dict = {}
_SCHUB_LOCK = threading.Lock()


def _schub(w: Permutation) -> Poly:
    hit = _SCHUB_CACHE.get(w)
    if hit is not None:
        return hit
    d = max(w.last_descent(), 1)
    vals = w.values(d)
    asc = next((i for i in range(1, d) if vals[i - 1] < vals[i]), None)
    if asc is None:
        # w(1) > ... > w(d): the dominant monomial
        res = Poly.monomial(tuple(v - 1 for v in vals))
    else:
        res = divided_difference(_schub(multiply(w, simple(asc))).extend(d), asc)
    with _SCHUB_LOCK:
        _SCHUB_CACHE.setdefault(w, res)
    return res


def schubert_poly(w: Permutation, n: int | None = None) -> Poly:
    """The Schubert polynomial of ``w``, as a polynomial in ``n`` variables.

    ``n`` must be at least the last descent of ``w`` (so that ``w`` lies in
    S_infinity^(n)); it defaults to that value.
    """
    d = max(w.last_descent(), 1)
    if n is None:
        n = d
    if n < w.last_descent():
        raise ValueError(f"{w!r} is not in S_infinity^({n})")
    return _schub(w).extend(n)


def specialize_ones(f: Poly) -> int:
    return sum(f.terms.values())


def _pick_maximal(exps) -> tuple:
    # prec-maximal exponents, ties broken by the lexicographically largest
    by_deg: dict = {}
    for e in exps:
        by_deg.setdefault(sum(e), []).append(e)
    maxima = []
    for group in by_deg.values():
        for e in group:
            if not any(prec(e, f) for f in group if f != e):
                maxima.append(e)
    return max(maxima)


def schubert_expand(f: Poly) -> dict:
    """Coefficients ``c_w`` with ``f = sum c_w S_w`` (exact)."""
    if f.min_exponent() < 0:
        raise ValueError("Schubert expansion needs nonnegative exponents")
    n = f.nvars
    rest = dict(f.terms)
    out: dict = {}
    bound = (len(rest) + 1) * (max(f.degree(), 0) + 1) ** n + 16
    steps = 0
    while rest:
        steps += 1
        if steps > bound:
            raise ExpansionError(f"Schubert expansion did not terminate for {f!r}")
        lam = _pick_maximal(rest)
        c = rest[lam]
        w = perm_from_code(lam)
        out[w] = out.get(w, 0) + c
        for e, a in schubert_poly(w, n).terms.items():
            v = rest.get(e, 0) - c * a
            if v:
                rest[e] = v
            else:
                rest.pop(e, None)
    return {w: c for w, c in out.items() if c}


# ---------------------------------------------------------------------------
# H_n

class HnElement:
    """An element ``sum c_w S_w`` of H_n (``w`` in S_n)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping | None = None):
        self.n = n
        self.coeffs = {}
        for w, c in (coeffs or {}).items():
            if not w.in_S(n):
                raise ValueError(f"{w!r} is not in S_{n}")
            if c:
                self.coeffs[w] = self.coeffs.get(w, 0) + c
        self.coeffs = {w: c for w, c in self.coeffs.items() if c}

    @classmethod
    def basis(cls, w: Permutation, n: int) -> "HnElement":
        return cls(n, {w: 1})

    def __eq__(self, other):
        return isinstance(other, HnElement) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return HnElement(self.n, out)

    def __neg__(self):
        return HnElement(self.n, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return HnElement(self.n, {w: c * other for w, c in self.coeffs.items()})
        return hn_mul(self, other)

    def __repr__(self):
        body = ", ".join(f"{w.one_line(self.n)}: {c}" for w, c in sorted(self.coeffs.items()))
        return f"HnElement({self.n}, {{{body}}})"


def hn_to_poly(e: HnElement) -> Poly:
    """A polynomial representative (the Schubert polynomial combination)."""
    out = Poly(e.n)
    for w, c in e.coeffs.items():
        out = out + schubert_poly(w, e.n) * c
    return out


def reduce_Hn(f: Poly, n: int | None = None) -> HnElement:
    """The class of ``f`` in H_n.

    Schubert classes outside S_n lie in the ideal, so expansion followed by
    dropping those terms is the reduction.
    """
    if n is None:
        n = f.nvars
    if f.nvars != n:
        f = f.extend(n)
    coeffs = schubert_expand(f)
    return HnElement(n, {w: c for w, c in coeffs.items() if w.in_S(n)})


def hn_mul(a: HnElement, b: HnElement) -> HnElement:
    if a.n != b.n:
        raise ValueError("H_n elements of different rank")
    return reduce_Hn(hn_to_poly(a) * hn_to_poly(b), a.n)


def iota_poly(f: Poly) -> Poly:
    """Substitute ``x_i -> -x_{n+1-i}``."""
    return Poly(f.nvars, {tuple(reversed(e)): (-c if sum(e) % 2 else c)
                          for e, c in f.terms.items()})


def iota_Hn(e: HnElement) -> HnElement:
    """The involution of H_n induced by ``x_i -> -x_{n+1-i}``.

    Goes through a polynomial representative and re-reduces, so the
    action on Schubert classes is computed rather than assumed.
    """
    return reduce_Hn(iota_poly(hn_to_poly(e)), e.n)


def cauchy_product(n: int):
    """Both sides of ``sum_w S_w(x) S_{w w0}(y) = prod_{i+j<=n} (x_i + y_j)``.

    Polynomials in ``2n`` variables ``x_1..x_n, y_1..y_n``.
    """
    lhs = Poly(2 * n)
    top = w0(n)
    for w in all_perms(n):
        sx = schubert_poly(w, n)
        sy = schubert_poly(multiply(w, top), n)
        px = Poly(2 * n, {e + (0,) * n: c for e, c in sx.terms.items()})
        py = Poly(2 * n, {(0,) * n + e: c for e, c in sy.terms.items()})
        lhs = lhs + px * py
    rhs = Poly.const(2 * n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i + j <= n:
                rhs = rhs * (Poly.var(2 * n, i) + Poly.var(2 * n, n + j))
    return lhs, rhs


def schubert_classes(n: int) -> Iterable:
    for w in all_perms(n):
        yield w, schubert_poly(w, n)


def poly_to_json(f: Poly) -> dict:
    return {"format": 1, "n": f.nvars,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in f.sorted_terms()]}


def poly_from_json(data: dict) -> Poly:
    try:
        n = int(data["n"])
        terms = {}
        for t in data["terms"]:
            e = tuple(int(a) for a in t["exp"])
            terms[e] = terms.get(e, 0) + int(str(t["coeff"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed polynomial JSON: {exc}") from None
    return Poly(n, terms)
