"""
Permutations of S_n and S_infinity^(n), Lehmer codes, and the orderings
<, <' and the induced partial order on integer weight vectors.

A permutation is stored by its one-line window ``w(1), ..., w(m)``; all
points beyond the window are fixed.  The window is kept minimal (trailing
fixed points are trimmed), so equal permutations have equal windows.

>>> code(Permutation.parse("2143"))
(1, 0, 1, 0)
>>> perm_from_code((3, 0, 0))
Permutation([4, 1, 2, 3])
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "Weight",
    "code", "perm_from_code", "length", "multiply", "inverse",
    "transposition", "simple", "w0", "identity", "conjugate_w0",
    "all_perms", "shift_perm",
    "weight_order", "lt", "lt_prime", "prec", "preceq",
    "in_lambda_n", "lambda_n", "bar", "rho", "ones", "alpha",
    "order_key", "linear_extension", "is_order_ideal",
]

Weight = tuple  # tuple[int, ...]


class Permutation:
    """A finitely supported bijection of the positive integers."""

    __slots__ = ("_w", "_hash")

    def __init__(self, window: Iterable[int]):
        w = [int(x) for x in window]
        m = len(w)
        if sorted(w) != list(range(1, m + 1)):
            raise ValueError(f"not a permutation window: {w}")
        while w and w[-1] == len(w):
            w.pop()
        self._w = tuple(w)
        self._hash = hash(self._w)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse one-line notation: ``"2143"`` or ``"[2,1,4,3]"``."""
        s = text.strip()
        if s.startswith("["):
            if not s.endswith("]"):
                raise ValueError(f"bad permutation: {text!r}")
            body = s[1:-1].strip()
            vals = [int(x) for x in body.split(",")] if body else []
        else:
            if not s.isdigit():
                raise ValueError(f"bad permutation: {text!r}")
            vals = [int(c) for c in s]
        return cls(vals)

    @property
    def window(self) -> tuple:
        return self._w

    def __call__(self, i: int) -> int:
        if i < 1:
            raise ValueError("permutations act on positive integers")
        return self._w[i - 1] if i <= len(self._w) else i

    def values(self, m: int) -> tuple:
        """The images ``w(1), ..., w(m)`` for any ``m >= 0``."""
        return tuple(self(i) for i in range(1, m + 1))

    def __len__(self):
        return len(self._w)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._w == other._w

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        m = max(len(self), len(other))
        return self.values(m) < other.values(m)

    def __repr__(self):
        return f"Permutation({list(self._w)})"

    def one_line(self, n: int = 0) -> str:
        """One-line notation padded to at least ``n`` entries."""
        vals = self.values(max(n, len(self._w)))
        if all(v < 10 for v in vals):
            return "".join(str(v) for v in vals)
        return "[" + ",".join(str(v) for v in vals) + "]"

    __str__ = one_line

    def __mul__(self, other: "Permutation") -> "Permutation":
        return multiply(self, other)

    def in_S(self, n: int) -> bool:
        return len(self._w) <= n

    def in_S_inf(self, n: int) -> bool:
        """Membership in S_infinity^(n): ``w(n+1) < w(n+2) < ...``."""
        tail = self._w[n:]
        return all(a < b for a, b in zip(tail, tail[1:]))

    def last_descent(self) -> int:
        d = 0
        for i in range(1, len(self._w)):
            if self._w[i - 1] > self._w[i]:
                d = i
        return d


def identity() -> Permutation:
    return Permutation(())


def multiply(w: Permutation, v: Permutation) -> Permutation:
    """The composite ``w v`` (apply ``v`` first)."""
    m = max(len(w), len(v))
    return Permutation(w(v(i)) for i in range(1, m + 1))


def inverse(w: Permutation) -> Permutation:
    m = len(w)
    inv = [0] * m
    for i in range(1, m + 1):
        inv[w(i) - 1] = i
    return Permutation(inv)


def transposition(i: int, j: int) -> Permutation:
    if i == j or min(i, j) < 1:
        raise ValueError("transposition needs two distinct positive points")
    m = max(i, j)
    vals = list(range(1, m + 1))
    vals[i - 1], vals[j - 1] = vals[j - 1], vals[i - 1]
    return Permutation(vals)


def simple(i: int) -> Permutation:
    return transposition(i, i + 1)


def w0(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def conjugate_w0(w: Permutation, n: int) -> Permutation:
    """``w0 w w0`` for ``w`` in S_n."""
    if not w.in_S(n):
        raise ValueError(f"{w!r} is not in S_{n}")
    return Permutation(n + 1 - w(n + 1 - i) for i in range(1, n + 1))


def shift_perm(w: Permutation) -> Permutation:
    """``1 x w``: fix 1 and shift ``w`` up by one."""
    return Permutation([1] + [v + 1 for v in w.window])


def length(w: Permutation) -> int:
    vals = w.window
    return sum(1 for i in range(len(vals)) for j in range(i + 1, len(vals))
               if vals[i] > vals[j])


def code(w: Permutation, n: int | None = None) -> Weight:
    """Lehmer code ``(code(w)_1, ..., code(w)_n)``.

    ``n`` defaults to the window size; entries beyond the window are zero.
    """
    vals = w.window
    if n is None:
        n = len(vals)
    out = []
    for i in range(n):
        if i >= len(vals):
            out.append(0)
            continue
        a = vals[i]
        out.append(sum(1 for b in vals[i + 1:] if b < a))
    return tuple(out)


def perm_from_code(lam: Sequence[int]) -> Permutation:
    """The unique ``w`` in S_infinity^(n) with ``code(w) = lam``."""
    if any(a < 0 for a in lam):
        raise ValueError(f"code entries must be nonnegative: {tuple(lam)}")
    n = len(lam)
    top = max((a + i + 1 for i, a in enumerate(lam)), default=0)
    avail = list(range(1, max(top, n) + 1))
    out = []
    for a in lam:
        out.append(avail.pop(a))
    out.extend(avail)
    return Permutation(out)


def all_perms(n: int) -> list:
    """All of S_n in lexicographic order of one-line notation."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# weights

def rho(n: int) -> Weight:
    return tuple(range(n - 1, -1, -1))


def ones(n: int) -> Weight:
    return (1,) * n


def alpha(p: int, q: int, n: int) -> Weight:
    """The root ``e_p - e_q`` (1-based indices)."""
    v = [0] * n
    v[p - 1] += 1
    v[q - 1] -= 1
    return tuple(v)


def in_lambda_n(lam: Sequence[int]) -> bool:
    n = len(lam)
    return all(0 <= a <= n - 1 - i for i, a in enumerate(lam))


def lambda_n(n: int) -> list:
    """The box ``0 <= a_i <= n - i``, in lexicographic order."""
    return [tuple(t) for t in itertools.product(*(range(n - i) for i in range(n)))]


def bar(lam: Sequence[int]) -> Weight:
    """``code(w0 w w0)`` where ``lam = code(w)``; defined on Lambda_n."""
    lam = tuple(lam)
    n = len(lam)
    if not in_lambda_n(lam):
        raise ValueError(f"{lam} is not in Lambda_{n}")
    return code(conjugate_w0(perm_from_code(lam), n), n)


def _inverse_values(lam: Sequence[int], k: int, m: int) -> tuple:
    shifted = [a + k for a in lam]
    return inverse(perm_from_code(shifted)).values(m)


def _common_shift(*weights) -> int:
    lo = min((a for lam in weights for a in lam), default=0)
    return max(0, -lo)


def _window_size(weights, k: int) -> int:
    return max(len(lam) + max((a + k for a in lam), default=0) + 1 for lam in weights)


def weight_order(lam, mu, kind: str = "prec"):
    """Compare two weights under ``kind`` in ``{"lt", "lt_prime", "prec"}``.

    Returns ``True`` if ``lam`` is strictly below ``mu``, ``False`` if the
    two are comparable but ``lam`` is not below ``mu`` (including
    ``lam == mu``), and ``None`` if they are incomparable.
    """
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu):
        raise ValueError("weights of different rank")
    if kind not in ("lt", "lt_prime", "prec"):
        raise ValueError(f"unknown order {kind!r}")
    if lam == mu:
        return False
    if sum(lam) != sum(mu):
        return None
    k = _common_shift(lam, mu)
    m = _window_size((lam, mu), k)
    x = _inverse_values(lam, k, m)
    y = _inverse_values(mu, k, m)
    # lam < mu  iff  x >lex y;  lam <' mu  iff  x >rlex y
    below_lex = x > y
    below_rlex = x[::-1] > y[::-1]
    if kind == "lt":
        return below_lex
    if kind == "lt_prime":
        return below_rlex
    if below_lex and below_rlex:
        return True
    if not below_lex and not below_rlex:
        return False
    return None


def lt(lam, mu) -> bool:
    return weight_order(lam, mu, "lt") is True


def lt_prime(lam, mu) -> bool:
    return weight_order(lam, mu, "lt_prime") is True


def prec(lam, mu) -> bool:
    return weight_order(lam, mu, "prec") is True


def preceq(lam, mu) -> bool:
    return tuple(lam) == tuple(mu) or prec(lam, mu)


def order_key(weights: Iterable) -> dict:
    """Sort keys realising ``<`` within each degree, shared across ``weights``.

    Sorting by ``key[lam]`` gives a linear extension of ``<`` (hence of the
    partial order ``prec``) on the given set.
    """
    ws = [tuple(w) for w in weights]
    if not ws:
        return {}
    k = _common_shift(*ws)
    m = _window_size(ws, k)
    # larger inverse in lex order means smaller weight
    return {lam: (sum(lam), tuple(-v for v in _inverse_values(lam, k, m))) for lam in ws}


def linear_extension(weights: Iterable) -> list:
    """The weights sorted along a linear extension of ``prec`` (minimal first)."""
    ws = sorted(set(tuple(w) for w in weights))
    key = order_key(ws)
    return sorted(ws, key=lambda lam: key[lam])


def is_order_ideal(subset: Iterable, universe: Iterable) -> bool:
    """Whether ``subset`` is downward closed for ``prec`` inside ``universe``."""
    sub = set(tuple(x) for x in subset)
    for mu in universe:
        mu = tuple(mu)
        if mu in sub:
            continue
        if any(prec(mu, lam) for lam in sub):
            return False
    return True


def permutations_of_length(n: int, ell: int) -> Iterator[Permutation]:
    for w in all_perms(n):
        if length(w) == ell:
            yield w
