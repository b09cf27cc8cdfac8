"""
KP modules, tilting modules T(lambda), and the full tilting module T with
its commuting second action, index swap, exterior product and pairing.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field

from .linalg import Echelon, SparseMatrix
from .perm import (Permutation, bar, conjugate_w0, in_lambda_n, length,
                   multiply, perm_from_code, transposition)
from .weightmod import (WeightModule, _sort_sign, exterior_power,
                        gen_pairs, one_dim, tensor, truncated_vector, twist,
                        vector_rep)

__all__ = [
    "KPModule", "FullTilting", "kp_module", "kp_module_gen", "tilting_module",
    "full_tilting", "embed_kp_in_T", "swap_sign", "J_set", "m_pq", "v_pq",
    "check_lemma_pqpq", "LemmaReport",
]


class KPModule(WeightModule):
    """A KP module with its permutation, shift and generator index.

    ``distinguished`` is the index of the generator ``u_lambda``.
    """

    __slots__ = ("w", "shift")

    def __init__(self, n, weights, gens, distinguished, w, shift=0):
        super().__init__(n, weights, gens, distinguished)
        self.w = w
        self.shift = shift

    @property
    def generator_weight(self):
        return self.weights[self.distinguished]

    def __repr__(self):
        return f"KPModule({self.w.one_line(self.n)}, n={self.n}, shift={self.shift}, dim={self.dim})"


def _factors(w: Permutation, n: int) -> tuple:
    # l_j > 0 factors in increasing j; each is the sorted set {i < j : w(i) > w(j)}
    out = []
    for j in range(2, len(w.window) + 1):
        f = tuple(i for i in range(1, j) if w(i) > w(j))
        if f:
            out.append(f)
    return tuple(out)


def _act_key(key: tuple, p: int, q: int) -> dict:
    out: dict = {}
    for pos, f in enumerate(key):
        if q in f and p not in f:
            sign, s = _sort_sign(tuple(p if a == q else a for a in f))
            new = key[:pos] + (s,) + key[pos + 1:]
            out[new] = out.get(new, 0) + sign
    return out


def _key_weight(key: tuple, n: int) -> tuple:
    w = [0] * n
    for f in key:
        for a in f:
            w[a - 1] += 1
    return tuple(w)


_KP_CACHE: dict = {}
_KP_LOCK = threading.Lock()


def kp_module(w: Permutation, n: int | None = None) -> KPModule:
    """The KP module generated by ``u_w`` in its tensor of exterior powers.

    The ambient space is never built in full: basis tensors are created on
    demand while closing the span of ``u_w`` under the ``e_pq``.
    """
    if n is None:
        n = max(w.last_descent(), 1)
    if not w.in_S_inf(n):
        raise ValueError(f"{w!r} is not in S_infinity^({n})")
    hit = _KP_CACHE.get((w, n))
    if hit is not None:
        return hit
    pairs = gen_pairs(n)
    ids: dict = {}
    keys: list = []

    def kid(key):
        k = ids.get(key)
        if k is None:
            k = ids[key] = len(keys)
            keys.append(key)
        return k

    def act(pq, v):
        out: dict = {}
        for k, x in v.items():
            for key, s in _act_key(keys[k], *pq).items():
                j = kid(key)
                y = out.get(j, 0) + s * x
                if y:
                    out[j] = y
                else:
                    out.pop(j, None)
        return out

    gen_key = _factors(w, n)
    start = {kid(gen_key): 1}
    ech = Echelon()
    ech.add(start)
    queue = [start]
    while queue:
        v = queue.pop()
        for pq in pairs:
            img = act(pq, v)
            if img:
                b = ech.add(img)
                if b is not None:
                    queue.append(b)
    pivots = sorted(ech.pivots, key=lambda p: (_key_weight(keys[p], n), p))
    pos = {p: i for i, p in enumerate(pivots)}
    d = len(pivots)
    gens = {}
    for pq in pairs:
        cols = {}
        for i, p in enumerate(pivots):
            img = act(pq, ech.pivots[p])
            if img:
                cols[i] = {pos[r]: img[r] for r in ech.pivots if r in img}
        gens[pq] = SparseMatrix(d, d, cols)
    weights = [_key_weight(keys[p], n) for p in pivots]
    M = KPModule(n, weights, gens, pos[0], w, 0)
    with _KP_LOCK:
        _KP_CACHE.setdefault((w, n), M)
    return _KP_CACHE[(w, n)]


def kp_module_gen(lam, k: int | None = None) -> KPModule:
    """``S_lambda = S_w (x) K_{-k 1}`` with ``code(w) = lambda + k 1``.

    ``k`` defaults to the least shift making ``lambda + k 1`` nonnegative;
    any larger ``k`` gives an isomorphic module.
    """
    lam = tuple(lam)
    n = len(lam)
    kmin = max(0, -min(lam, default=0))
    if k is None:
        k = kmin
    if k < kmin:
        raise ValueError(f"shift {k} leaves negative entries in {lam}")
    w = perm_from_code(tuple(a + k for a in lam))
    base = kp_module(w, n)
    if k == 0:
        return base
    shifted = twist(base, (-k,) * n)
    return KPModule(n, shifted.weights, shifted.gens, base.distinguished, w, k)


def tilting_module(lam) -> WeightModule:
    """``T(lambda) = (x)_j wedge^{bar(lambda)_j} K^{n-j}``."""
    lam = tuple(lam)
    n = len(lam)
    if not in_lambda_n(lam):
        raise ValueError(f"{lam} is not in Lambda_{n}")
    lb = bar(lam)
    out = one_dim((0,) * n)
    for j in range(1, n):
        out = tensor(out, exterior_power(truncated_vector(n, n - j), lb[j - 1]))
    return out


# ---------------------------------------------------------------------------
# the full tilting module

class FullTilting(WeightModule):
    """``T = wedge^*(K^{n-1} + ... + K^1)`` on the letters ``u_ij``, ``i + j <= n``.

    Basis: subsets of ``P`` written as increasing tuples of letters (letters
    ordered lexicographically), basis order by the tuples themselves.
    """

    __slots__ = ("letters", "subsets", "index", "bprime", "hprime_weights",
                 "swap", "_pairing")

    def weight_block(self, mu) -> list:
        """Basis indices with h'-weight ``mu``."""
        mu = tuple(mu)
        return [k for k, w in enumerate(self.hprime_weights) if w == mu]

    def monomial(self, letters) -> tuple:
        """``(sign, index)`` of the wedge of ``letters`` in the given order."""
        sign, s = _sort_sign(tuple(letters))
        if not sign:
            return 0, None
        return sign, self.index[s]

    def wedge(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for a, x in u.items():
            A = self.subsets[a]
            for b, y in v.items():
                sign, k = self.monomial(A + self.subsets[b])
                if sign:
                    z = out.get(k, 0) + sign * x * y
                    if z:
                        out[k] = z
                    else:
                        out.pop(k, None)
        return out

    def wedge_letter(self, u: dict, letter) -> dict:
        """``u ^ u_letter``."""
        sign, k = self.monomial((letter,))
        return self.wedge(u, {k: 1})

    def pairing_matrix(self) -> SparseMatrix:
        """``G[s, r]`` = coefficient of the top monomial in ``u_s ^ u_r``."""
        if self._pairing is None:
            top = len(self.subsets) - 1
            full = set(self.letters)
            ent = []
            for s, S in enumerate(self.subsets):
                R = tuple(sorted(full - set(S)))
                sign, k = self.monomial(S + R)
                ent.append((s, self.index[R], sign))
            self._pairing = SparseMatrix.from_entries(top + 1, top + 1, ent)
        return self._pairing

    def pair(self, u: dict, v: dict):
        gv = self.pairing_matrix().apply(v)
        total = 0
        for s, x in u.items():
            total += x * gv.get(s, 0)
        return total

    def bprime_module(self) -> WeightModule:
        """T as a module for the second action (weights = h'-weights)."""
        gens = {pq: m for pq, m in self.bprime.items() if pq[0] < pq[1]}
        return WeightModule(self.n, self.hprime_weights, gens)


def _letter_matrix(subsets, index, rule) -> SparseMatrix:
    # rule(letter) -> new letter or None; acts as a derivation on monomials
    d = len(subsets)
    cols = {}
    for k, S in enumerate(subsets):
        out: dict = {}
        for pos, a in enumerate(S):
            b = rule(a)
            if b is None:
                continue
            sign, s = _sort_sign(S[:pos] + (b,) + S[pos + 1:])
            if sign:
                j = index[s]
                out[j] = out.get(j, 0) + sign
        out = {j: x for j, x in out.items() if x}
        if out:
            cols[k] = out
    return SparseMatrix(d, d, cols)


_FT_CACHE: dict = {}


def full_tilting(n: int) -> FullTilting:
    if n < 1:
        raise ValueError("n must be positive")
    if n in _FT_CACHE:
        return _FT_CACHE[n]
    letters = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i + j <= n]
    subsets = []
    for r in range(len(letters) + 1):
        subsets.extend(itertools.combinations(letters, r))
    subsets.sort()
    index = {S: k for k, S in enumerate(subsets)}
    weights, hweights = [], []
    for S in subsets:
        a, b = [0] * n, [0] * n
        for i, j in S:
            a[i - 1] += 1
            b[j - 1] += 1
        weights.append(tuple(a))
        hweights.append(tuple(b))
    gens = {}
    for p, q in gen_pairs(n):
        gens[(p, q)] = _letter_matrix(subsets, index,
                                      lambda a, p=p, q=q: (p, a[1]) if a[0] == q else None)
    bprime = {}
    for p in range(1, n + 1):
        for q in range(p, n + 1):
            if p == q:
                bprime[(p, p)] = SparseMatrix(len(subsets), len(subsets),
                                              {k: {k: hw[p - 1]} for k, hw in enumerate(hweights)})
            else:
                bprime[(p, q)] = _letter_matrix(subsets, index,
                                                lambda a, p=p, q=q: (a[0], p) if a[1] == q else None)
    swap_cols = {}
    for k, S in enumerate(subsets):
        sign, s = _sort_sign(tuple((j, i) for i, j in S))
        swap_cols[k] = {index[s]: sign}
    T = FullTilting(n, weights, gens)
    T.letters = letters
    T.subsets = subsets
    T.index = index
    T.bprime = bprime
    T.hprime_weights = hweights
    T.swap = SparseMatrix(len(subsets), len(subsets), swap_cols)
    T._pairing = None
    _FT_CACHE[n] = T
    return T


# ---------------------------------------------------------------------------
# combinatorics of the tensor identity

def J_set(w: Permutation, n: int) -> tuple:
    """``{(i, n+1-j) : i < j, w(i) > w(j)}``, sorted."""
    return tuple(sorted((i, n + 1 - j) for i in range(1, n + 1)
                        for j in range(i + 1, n + 1) if w(i) > w(j)))


def embed_kp_in_T(w: Permutation, n: int) -> dict:
    """``u_w`` as the wedge of the letters in ``J(w)`` (sorted, sign +1)."""
    if not w.in_S(n):
        raise ValueError(f"{w!r} is not in S_{n}")
    T = full_tilting(n)
    return {T.index[J_set(w, n)]: 1}


def swap_sign(w: Permutation, n: int) -> int:
    """The sign ``c`` in ``swap(u_w) = c u_{w0 w w0}`` for the sorted basis."""
    T = full_tilting(n)
    (k, _), = embed_kp_in_T(w, n).items()
    img = T.swap.apply({k: 1})
    (j, c), = img.items()
    if {j: 1} != embed_kp_in_T(conjugate_w0(w, n), n):
        raise AssertionError("swap does not send u_w to a multiple of u_{w0 w w0}")
    return c


def m_pq(w: Permutation, p: int, q: int) -> int:
    if not p < q:
        raise ValueError("need p < q")
    top = max(len(w.window), q) + 1
    return sum(1 for r in range(q + 1, top + 1) if w(p) < w(r) < w(q))


def v_pq(x: Permutation, p: int, q: int, n: int):
    """``e_pq^m u_x (x) u_p`` in ``S_x (x) K^n``; returns (module, vector)."""
    if not (1 <= p < q <= n + 1):
        raise ValueError("need 1 <= p < q <= n + 1")
    if length(multiply(x, transposition(p, q))) != length(x) + 1:
        raise ValueError(f"l(x t_{p}{q}) != l(x) + 1")
    S = kp_module(x, n)
    M = tensor(S, vector_rep(n))
    v = {S.distinguished: 1}
    m = m_pq(x, p, q)
    for _ in range(m):
        v = S.gens[(p, q)].apply(v)
    vec = {k * n + (p - 1): c for k, c in v.items()}
    return M, vec


@dataclass
class LemmaReport:
    w: Permutation
    i: int
    ok: bool
    checked: int
    failures: list = field(default_factory=list)


def check_lemma_pqpq(w: Permutation, i: int, n: int, swap: SparseMatrix | None = None) -> LemmaReport:
    """Check the (p, q, p', q') vanishing pattern and the diagonal case.

    The second action is rebuilt as ``swap o e_pq o swap`` so a wrong swap
    shows up as a failure.  Also checks that the three operators used
    commute on the vectors involved.
    """
    if not w.in_S(n):
        raise ValueError(f"{w!r} is not in S_{n}")
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= n - 1, got {i}")
    T = full_tilting(n)
    S = T.swap if swap is None else swap
    ell = length(w)
    wb = conjugate_w0(w, n)
    adm = [(p, q) for p in range(1, i + 1) for q in range(i + 1, n + 1)
           if length(multiply(w, transposition(p, q))) == ell + 1]
    uw = embed_kp_in_T(w, n)

    def eprime(a, b, v, times):
        # second action of e'_ab, a < b, via the swap
        for _ in range(times):
            v = S.apply(T.gens[(a, b)].apply(S.apply(v)))
        return v

    def e(p, q, v, times):
        for _ in range(times):
            v = T.gens[(p, q)].apply(v)
        return v

    rep = LemmaReport(w, i, True, 0)
    for (p, q), (p2, q2) in itertools.product(adm, repeat=2):
        rep.checked += 1
        a, b = n + 1 - q2, n + 1 - p2
        mp = m_pq(wb, a, b)
        m = m_pq(w, p, q)
        letter = (p, n + 1 - q2)
        x1 = T.wedge_letter(eprime(a, b, e(p, q, uw, m), mp), letter)
        x2 = T.wedge_letter(e(p, q, eprime(a, b, uw, mp), m), letter)
        x3 = eprime(a, b, e(p, q, T.wedge_letter(uw, letter), m), mp)
        if not (x1 == x2 == x3):
            rep.ok = False
            rep.failures.append(((p, q), (p2, q2), "operators do not commute"))
            continue
        if x1 and not (w(p) <= w(p2) and w(q) <= w(q2)):
            rep.ok = False
            rep.failures.append(((p, q), (p2, q2), "nonzero off the allowed pattern"))
        if (p, q) == (p2, q2):
            target = embed_kp_in_T(multiply(w, transposition(p, q)), n)
            (k, _), = target.items()
            if not x1 or set(x1) != {k}:
                rep.ok = False
                rep.failures.append(((p, q), (p2, q2), "diagonal term not a multiple of u_{w t_pq}"))
    return rep
