"""
Finite-dimensional weight modules over the upper-triangular Lie algebra b.

A module is a list of weights (one per basis vector) together with a sparse
exact matrix for each strictly upper generator ``e_pq``.  The diagonal part
of b acts through the weights, so it is never stored.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .linalg import (Echelon, SparseMatrix, nullspace, rational_str,
                     to_rational, vec_iadd)
from .perm import alpha, rho
from .schubert import Poly

__all__ = [
    "WeightModule", "Morphism", "HomSpace", "ValidationError",
    "gen_pairs", "validate", "one_dim", "zero_module", "vector_rep",
    "truncated_vector", "tensor", "tensor_power", "exterior_power",
    "direct_sum", "dual_twist", "twist", "character", "submodule_generated",
    "quotient", "largest_quotient", "largest_submodule_le", "hom_space",
    "is_isomorphic", "module_to_json", "module_from_json",
]


class ValidationError(ValueError):
    """A module or morphism failed one of its defining identities."""


def gen_pairs(n: int) -> list:
    return [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]


def _add_w(a, b):
    return tuple(x + y for x, y in zip(a, b))


class WeightModule:
    """A weight b-module with basis tagged by weights in Z^n."""

    __slots__ = ("n", "weights", "gens", "distinguished", "_spaces")

    def __init__(self, n: int, weights: Iterable, gens: dict | None = None,
                 distinguished: int | None = None):
        self.n = n
        self.weights = [tuple(int(a) for a in w) for w in weights]
        for w in self.weights:
            if len(w) != n:
                raise ValueError(f"weight {w} does not have {n} entries")
        d = len(self.weights)
        self.gens = {}
        gens = gens or {}
        for pq in gens:
            if pq not in set(gen_pairs(n)):
                raise ValueError(f"unknown generator e_{pq[0]}_{pq[1]} for n={n}")
        for pq in gen_pairs(n):
            m = gens.get(pq)
            if m is None:
                m = SparseMatrix.zeros(d, d)
            if m.shape != (d, d):
                raise ValueError(f"generator e_{pq} has shape {m.shape}, expected {(d, d)}")
            self.gens[pq] = m
        if distinguished is not None and not 0 <= distinguished < d:
            raise ValueError("distinguished index out of range")
        self.distinguished = distinguished
        self._spaces = None

    @property
    def dim(self) -> int:
        return len(self.weights)

    def weight_spaces(self) -> dict:
        """``{weight: [basis indices]}``, weights in lexicographic order."""
        if self._spaces is None:
            sp: dict = {}
            for i, w in enumerate(self.weights):
                sp.setdefault(w, []).append(i)
            self._spaces = dict(sorted(sp.items()))
        return self._spaces

    def support(self) -> list:
        return list(self.weight_spaces())

    def act(self, pq, v: dict) -> dict:
        return self.gens[pq].apply(v)

    def weight_of(self, v: dict):
        """The weight of a homogeneous nonzero vector (None for zero)."""
        ws = {self.weights[i] for i in v}
        if len(ws) > 1:
            raise ValueError("vector is not weight-homogeneous")
        return next(iter(ws), None)

    def split_weights(self, v: dict) -> dict:
        out: dict = {}
        for i, x in v.items():
            out.setdefault(self.weights[i], {})[i] = x
        return out

    def unit(self, i: int) -> dict:
        return {i: 1}

    def __repr__(self):
        return f"WeightModule(n={self.n}, dim={self.dim})"


@dataclass
class Morphism:
    """A linear map ``source -> target``; ``matrix`` is ``target.dim x source.dim``."""

    source: WeightModule
    target: WeightModule
    matrix: SparseMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError(f"matrix shape {self.matrix.shape} does not fit "
                             f"{self.source.dim} -> {self.target.dim}")

    def __call__(self, v: dict) -> dict:
        return self.matrix.apply(v)

    def compose(self, other: "Morphism") -> "Morphism":
        """``self o other``."""
        return Morphism(other.source, self.target, self.matrix @ other.matrix)

    def violations(self) -> list:
        out = []
        for c, col in self.matrix.cols.items():
            for r in col:
                if self.target.weights[r] != self.source.weights[c]:
                    out.append(f"entry ({r},{c}) joins different weights")
                    return out
        for pq in gen_pairs(self.source.n):
            if self.matrix @ self.source.gens[pq] != self.target.gens[pq] @ self.matrix:
                out.append(f"does not commute with e_{pq[0]}_{pq[1]}")
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def rank(self) -> int:
        return self.matrix.rank()

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()

    def kernel(self) -> list:
        """A basis of the kernel as vectors of the source."""
        basis, _ = nullspace(self.matrix.rows(), self.source.dim)
        return basis

    def image(self) -> list:
        return Echelon(self.matrix.cols.values()).basis()


def identity_morphism(M: WeightModule) -> Morphism:
    return Morphism(M, M, SparseMatrix.identity(M.dim))


# ---------------------------------------------------------------------------
# validation

def validate(M: WeightModule, raise_error: bool = False) -> list:
    """Check weight shifts, brackets and nilpotency; returns violations."""
    out = []
    n = M.n
    for (p, q), E in M.gens.items():
        a = alpha(p, q, n)
        for c, col in E.cols.items():
            for r in col:
                if M.weights[r] != _add_w(M.weights[c], a):
                    out.append(f"e_{p}_{q} maps weight {M.weights[c]} to {M.weights[r]}")
                    break
            if out:
                break
    pairs = gen_pairs(n)
    for (p, q), (r, s) in itertools.combinations(pairs, 2):
        A, B = M.gens[(p, q)], M.gens[(r, s)]
        lhs = A @ B - B @ A
        rhs = SparseMatrix.zeros(M.dim, M.dim)
        if q == r:
            rhs = rhs + M.gens[(p, s)]
        if s == p:
            rhs = rhs - M.gens[(r, q)]
        if lhs != rhs:
            out.append(f"bracket [e_{p}_{q}, e_{r}_{s}] fails")
    if not out:
        for pq, E in M.gens.items():
            P = E
            for _ in range(M.dim):
                if P.is_zero():
                    break
                P = P @ E
            if not P.is_zero():
                out.append(f"e_{pq[0]}_{pq[1]} is not nilpotent")
    if out and raise_error:
        raise ValidationError(out[0])
    return out


# ---------------------------------------------------------------------------
# constructors

def one_dim(lam) -> WeightModule:
    lam = tuple(lam)
    return WeightModule(len(lam), [lam], {}, distinguished=0)


def zero_module(n: int) -> WeightModule:
    return WeightModule(n, [], {})


def truncated_vector(n: int, i: int) -> WeightModule:
    """``K^i`` inside ``K^n``: basis ``u_1..u_i``, ``e_pq u_q = u_p``."""
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
    weights = []
    for k in range(1, i + 1):
        w = [0] * n
        w[k - 1] = 1
        weights.append(tuple(w))
    gens = {}
    for p, q in gen_pairs(n):
        if q <= i:
            gens[(p, q)] = SparseMatrix(i, i, {q - 1: {p - 1: 1}})
    return WeightModule(n, weights, gens, distinguished=0 if i else None)


def vector_rep(n: int) -> WeightModule:
    return truncated_vector(n, n)


def tensor(M: WeightModule, N: WeightModule) -> WeightModule:
    """Basis ``(i, j) -> i * dim N + j``; e acts by the Leibniz rule."""
    if M.n != N.n:
        raise ValueError("tensor of modules of different rank")
    dM, dN = M.dim, N.dim
    weights = [_add_w(a, b) for a in M.weights for b in N.weights]
    gens = {}
    for pq in gen_pairs(M.n):
        cols: dict = {}
        for c, col in M.gens[pq].cols.items():
            for j in range(dN):
                tgt = cols.setdefault(c * dN + j, {})
                for r, x in col.items():
                    tgt[r * dN + j] = tgt.get(r * dN + j, 0) + x
        for c, col in N.gens[pq].cols.items():
            for i in range(dM):
                tgt = cols.setdefault(i * dN + c, {})
                for r, x in col.items():
                    k = i * dN + r
                    tgt[k] = tgt.get(k, 0) + x
        gens[pq] = SparseMatrix(dM * dN, dM * dN, cols)
    dist = None
    if M.distinguished is not None and N.distinguished is not None:
        dist = M.distinguished * dN + N.distinguished
    return WeightModule(M.n, weights, gens, dist)


def tensor_power(M: WeightModule, k: int) -> WeightModule:
    out = one_dim((0,) * M.n)
    for _ in range(k):
        out = tensor(out, M)
    return out


def twist(M: WeightModule, lam) -> WeightModule:
    """``M (x) K_lam``: same matrices, weights shifted by ``lam``."""
    return WeightModule(M.n, [_add_w(w, lam) for w in M.weights], M.gens, M.distinguished)


def direct_sum(*mods: WeightModule) -> WeightModule:
    if not mods:
        raise ValueError("empty direct sum")
    n = mods[0].n
    weights = [w for M in mods for w in M.weights]
    d = len(weights)
    gens = {}
    for pq in gen_pairs(n):
        cols = {}
        off = 0
        for M in mods:
            for c, col in M.gens[pq].cols.items():
                cols[c + off] = {r + off: x for r, x in col.items()}
            off += M.dim
        gens[pq] = SparseMatrix(d, d, cols)
    dist = mods[0].distinguished
    return WeightModule(n, weights, gens, dist)


def _sort_sign(seq) -> tuple:
    """Sort ``seq`` and return (sign, sorted tuple), or (0, None) on repeats."""
    s = list(seq)
    if len(set(s)) < len(s):
        return 0, None
    sign = 1
    # insertion sort counting transpositions
    for i in range(1, len(s)):
        j = i
        while j > 0 and s[j - 1] > s[j]:
            s[j - 1], s[j] = s[j], s[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(s)


def exterior_power(M: WeightModule, l: int) -> WeightModule:
    """``wedge^l M`` on strictly increasing index tuples."""
    if l < 0:
        raise ValueError("negative exterior degree")
    if l > M.dim:
        return zero_module(M.n)
    basis = list(itertools.combinations(range(M.dim), l))
    index = {t: k for k, t in enumerate(basis)}
    zero = (0,) * M.n
    weights = []
    for t in basis:
        w = zero
        for i in t:
            w = _add_w(w, M.weights[i])
        weights.append(w)
    gens = {}
    for pq in gen_pairs(M.n):
        E = M.gens[pq]
        cols = {}
        for k, t in enumerate(basis):
            out: dict = {}
            for pos, i in enumerate(t):
                for r, x in E.column(i).items():
                    sign, s = _sort_sign(t[:pos] + (r,) + t[pos + 1:])
                    if sign:
                        j = index[s]
                        out[j] = out.get(j, 0) + sign * x
            if out:
                cols[k] = out
        gens[pq] = SparseMatrix(len(basis), len(basis), cols)
    return WeightModule(M.n, weights, gens, 0 if basis else None)


def dual_twist(M: WeightModule) -> WeightModule:
    """``M^* (x) K_rho``: matrices ``-E^T``, weights ``rho - wt``."""
    r = rho(M.n)
    weights = [tuple(a - b for a, b in zip(r, w)) for w in M.weights]
    gens = {pq: (-E).transpose() for pq, E in M.gens.items()}
    return WeightModule(M.n, weights, gens)


def character(M: WeightModule) -> Poly:
    terms: dict = {}
    for w in M.weights:
        terms[w] = terms.get(w, 0) + 1
    return Poly(M.n, terms)


# ---------------------------------------------------------------------------
# submodules and quotients

def _span_closure(M: WeightModule, vectors: Iterable[dict]) -> Echelon:
    ech = Echelon()
    queue = []
    for v in vectors:
        for part in M.split_weights(v).values():
            b = ech.add(part)
            if b is not None:
                queue.append(b)
    pairs = gen_pairs(M.n)
    while queue:
        v = queue.pop()
        for pq in pairs:
            img = M.gens[pq].apply(v)
            if img:
                b = ech.add(img)
                if b is not None:
                    queue.append(b)
    return ech


def _sub_from_echelon(M: WeightModule, ech: Echelon, distinguished_vec=None):
    pivots = sorted(ech.pivots, key=lambda p: (M.weights[p], p))
    pos = {p: k for k, p in enumerate(pivots)}
    basis = [ech.pivots[p] for p in pivots]
    d = len(pivots)
    gens = {}
    for pq in gen_pairs(M.n):
        cols = {}
        E = M.gens[pq]
        for k, b in enumerate(basis):
            img = E.apply(b)
            if img:
                cols[k] = {pos[p]: img[p] for p in ech.pivots if p in img}
        gens[pq] = SparseMatrix(d, d, cols)
    dist = None
    if distinguished_vec is not None and distinguished_vec:
        coords = {pos[p]: x for p, x in ech.coords(distinguished_vec).items()}
        if len(coords) == 1:
            (k, _), = coords.items()
            dist = k
    S = WeightModule(M.n, [M.weights[p] for p in pivots], gens, dist)
    incl = Morphism(S, M, SparseMatrix.from_columns(M.dim, basis))
    return S, incl


def submodule_generated(M: WeightModule, vectors: Iterable[dict]):
    """The b-submodule generated by ``vectors`` with its inclusion into ``M``.

    The basis is the reduced echelon basis of the closure, ordered by
    weight; coordinates of a submodule vector are its pivot entries.
    """
    vectors = [v for v in vectors]
    ech = _span_closure(M, vectors)
    first = vectors[0] if len(vectors) == 1 else None
    return _sub_from_echelon(M, ech, first)


def _quotient_by_echelon(M: WeightModule, ech: Echelon):
    comp = [i for i in range(M.dim) if i not in ech.pivots]
    comp.sort(key=lambda i: (M.weights[i], i))
    pos = {i: k for k, i in enumerate(comp)}
    d = len(comp)
    gens = {}
    for pq in gen_pairs(M.n):
        E = M.gens[pq]
        cols = {}
        for k, i in enumerate(comp):
            col = E.column(i)
            if col:
                red = ech.reduce(col)
                if red:
                    cols[k] = {pos[j]: x for j, x in red.items()}
        gens[pq] = SparseMatrix(d, d, cols)
    proj_cols = {}
    for j in range(M.dim):
        red = ech.reduce({j: 1})
        if red:
            proj_cols[j] = {pos[i]: x for i, x in red.items()}
    dist = None
    if M.distinguished is not None and M.distinguished in pos:
        dist = pos[M.distinguished]
    Q = WeightModule(M.n, [M.weights[i] for i in comp], gens, dist)
    return Q, Morphism(M, Q, SparseMatrix(d, M.dim, proj_cols))


def quotient(M: WeightModule, sub):
    """``M / S`` and the projection.

    ``sub`` is either a list of vectors spanning a submodule or the
    inclusion morphism of one.
    """
    vectors = list(sub.matrix.cols.values()) if isinstance(sub, Morphism) else list(sub)
    ech = Echelon()
    for v in vectors:
        for part in M.split_weights(v).values():
            ech.add(part)
    for pq in gen_pairs(M.n):
        for b in list(ech.pivots.values()):
            img = M.gens[pq].apply(b)
            if img and ech.reduce(img):
                raise ValidationError("quotient by a subspace that is not a submodule")
    return _quotient_by_echelon(M, ech)


def largest_quotient(M: WeightModule, in_ideal: Callable):
    """The largest quotient whose weights all satisfy ``in_ideal``."""
    seeds = [{i: 1} for i, w in enumerate(M.weights) if not in_ideal(w)]
    ech = _span_closure(M, seeds)
    return _quotient_by_echelon(M, ech)


def largest_submodule_le(M: WeightModule, mu, order: str = "lt"):
    """The largest submodule all of whose weights are ``<= mu``.

    ``order`` names the comparison (``"lt"``, ``"lt_prime"``, ``"prec"``).
    Start from the allowed weight spaces and repeatedly keep only vectors
    whose images stay inside the current candidate.
    """
    from .perm import weight_order
    mu = tuple(mu)
    allowed = [i for i, w in enumerate(M.weights)
               if w == mu or weight_order(w, mu, order) is True]
    cur = Echelon({i: 1} for i in allowed)
    pairs = gen_pairs(M.n)
    while True:
        # V' = {v in V : e v in V for all e}
        basis = cur.basis()
        if not basis:
            break
        # coefficient vectors c with e(sum c_k b_k) in V for every e
        eqs: dict = {}
        for pq in pairs:
            imgs = [cur.reduce(M.gens[pq].apply(b)) for b in basis]
            for k, img in enumerate(imgs):
                for j, x in img.items():
                    eqs.setdefault((pq, j), {})[k] = x
        ker, _ = nullspace(eqs.values(), len(basis))
        if len(ker) == len(basis):
            break
        new = Echelon()
        for c in ker:
            v: dict = {}
            for k, x in c.items():
                vec_iadd(v, basis[k], x)
            for part in M.split_weights(v).values():
                new.add(part)
        cur = new
    return _sub_from_echelon(M, cur)


# ---------------------------------------------------------------------------
# homomorphisms

@dataclass
class HomSpace:
    """A basis of ``Hom(source, target)``.

    ``free[k]`` is the matrix cell ``(row, col)`` on which basis element
    ``k`` is 1 and every other basis element vanishes, so the coordinates
    of a morphism are its entries at the free cells.
    """

    source: WeightModule
    target: WeightModule
    basis: list
    free: list

    def __len__(self):
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, f) -> list:
        m = f.matrix if isinstance(f, Morphism) else f
        return [m[r, c] for r, c in self.free]

    def combine(self, coeffs) -> Morphism:
        m = SparseMatrix.zeros(self.target.dim, self.source.dim)
        for c, b in zip(coeffs, self.basis):
            if c:
                m = m + b.matrix.scale(c)
        return Morphism(self.source, self.target, m)


def hom_space(M: WeightModule, N: WeightModule) -> HomSpace:
    """All b-module maps ``M -> N``, as an exact basis."""
    if M.n != N.n:
        raise ValueError("modules of different rank")
    Nsp = N.weight_spaces()
    var: dict = {}
    cells = []
    for c, w in enumerate(M.weights):
        for r in Nsp.get(w, ()):
            var[(r, c)] = len(cells)
            cells.append((r, c))
    rows: dict = {}
    for pq in gen_pairs(M.n):
        EM, EN = M.gens[pq], N.gens[pq]
        EMrows = EM.rows()
        # (phi E_M)[r, c'] = sum_c phi[r, c] E_M[c, c']
        for (r, c), k in var.items():
            for c2, x in EMrows[c].items():
                row = rows.setdefault((pq, r, c2), {})
                row[k] = row.get(k, 0) + x
        # (E_N phi)[r', c] = sum_s E_N[r', s] phi[s, c]
        for (s, c), k in var.items():
            for r2, x in EN.column(s).items():
                row = rows.setdefault((pq, r2, c), {})
                row[k] = row.get(k, 0) - x
    eqs = [{k: x for k, x in row.items() if x} for row in rows.values()]
    basis_vecs, free = nullspace([e for e in eqs if e], len(cells))
    basis = []
    for v in basis_vecs:
        ent = [(cells[k][0], cells[k][1], x) for k, x in v.items()]
        basis.append(Morphism(M, N, SparseMatrix.from_entries(N.dim, M.dim, ent)))
    return HomSpace(M, N, basis, [cells[k] for k in free])


def _invertible(f: Morphism) -> bool:
    if f.source.dim != f.target.dim:
        return False
    return f.matrix.rank() == f.source.dim


def is_isomorphic(M: WeightModule, N: WeightModule, tries: int = 6, seed: int = 0):
    """An isomorphism ``M -> N`` or None.

    None means the characters differ or no sampled element of the Hom space
    was invertible.  Samples use coefficients up to 10^6, so a false None
    has probability at most ``dim / 10^6`` per sample.
    """
    if M.n != N.n or character(M) != character(N):
        return None
    if M.dim == 0:
        return Morphism(M, N, SparseMatrix.zeros(0, 0))
    H = hom_space(M, N)
    if not H.basis:
        return None
    if len(H.basis) == 1:
        return H.basis[0] if _invertible(H.basis[0]) else None
    rng = random.Random(seed)
    for _ in range(tries):
        coeffs = [rng.randint(-10 ** 6, 10 ** 6) for _ in H.basis]
        f = H.combine(coeffs)
        if _invertible(f):
            return f
    return None


# ---------------------------------------------------------------------------
# serialization

def module_to_json(M: WeightModule) -> dict:
    gens = {}
    for (p, q), E in sorted(M.gens.items()):
        gens[f"e_{p}_{q}"] = [[r, c, rational_str(x)] for r, c, x in E.entries()]
    return {
        "format": 1,
        "n": M.n,
        "weights": [list(w) for w in M.weights],
        "gens": gens,
        "distinguished": M.distinguished,
    }


def module_from_json(data: dict) -> WeightModule:
    try:
        n = int(data["n"])
        weights = [tuple(int(a) for a in w) for w in data["weights"]]
        d = len(weights)
        gens = {}
        for key, ents in data.get("gens", {}).items():
            parts = key.split("_")
            if len(parts) != 3 or parts[0] != "e":
                raise ValueError(f"bad generator key {key!r}")
            p, q = int(parts[1]), int(parts[2])
            gens[(p, q)] = SparseMatrix.from_entries(
                d, d, ((int(r), int(c), to_rational(x)) for r, c, x in ents))
        dist = data.get("distinguished")
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed module JSON: {exc}") from None
    return WeightModule(n, weights, gens, None if dist is None else int(dist))
