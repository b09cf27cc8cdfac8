"""
Ext groups, extensions, standard filtrations and tilting modules.

Ext is computed as the cohomology of the strictly upper-triangular
subalgebra n+ with coefficients in Hom(M, N), restricted to cochains of
total weight zero (the diagonal part acts semisimply, so this relative
complex computes Ext in the category of weight modules).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .linalg import Echelon, SparseMatrix, nullspace, solve
from .perm import (in_lambda_n, lambda_n, order_key, prec, preceq, rho,
                   weight_order)
from .weightmod import (Morphism, WeightModule, _add_w,
                        dual_twist, gen_pairs, hom_space, identity_morphism,
                        largest_quotient, quotient, submodule_generated)

__all__ = [
    "CochainComplex", "cochain_complex", "ext_dim", "ext_dims", "ext1_classes",
    "Extension", "realize_extension", "standard_module", "costandard_module",
    "Filtration", "FiltrationLayer", "standard_filtration",
    "filtration_multiplicity", "has_standard_filtration", "candidate_weights",
    "is_tilting", "defect", "Envelope", "tilting_envelope",
    "TiltingResolution", "tilting_resolution", "indecomposable_by_end",
    "support_ideal", "non_maximal",
]


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg complex

def _brackets(n: int):
    pairs = gen_pairs(n)
    idx = {pq: k for k, pq in enumerate(pairs)}
    br = {}
    for a, (p, q) in enumerate(pairs):
        for b, (r, s) in enumerate(pairs):
            if q == r:
                br[(a, b)] = (idx[(p, s)], 1)
            elif s == p:
                br[(a, b)] = (idx[(r, q)], -1)
    return pairs, br


def _root_sum(pairs, S, n):
    w = [0] * n
    for k in S:
        p, q = pairs[k]
        w[p - 1] += 1
        w[q - 1] -= 1
    return tuple(w)


def _sorted_sign(seq):
    s = list(seq)
    if len(set(s)) < len(s):
        return 0, None
    sign = 1
    for i in range(1, len(s)):
        j = i
        while j > 0 and s[j - 1] > s[j]:
            s[j - 1], s[j] = s[j], s[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(s)


@dataclass
class CochainComplex:
    """Weight-zero cochains ``wedge^d (n+)^* (x) Hom(M, N)``.

    ``bases[d]`` lists the cells ``(S, r, c)``: the cochain sending the
    wedge ``e_S`` to the matrix unit ``E_rc``.  ``diffs[d]`` maps degree
    ``d`` to ``d + 1``.
    """

    M: WeightModule
    N: WeightModule
    bases: list
    diffs: list
    _ranks: dict = field(default_factory=dict)

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def dim(self, d: int) -> int:
        return len(self.bases[d]) if 0 <= d <= self.top else 0

    def rank_d(self, d: int) -> int:
        if not 0 <= d < self.top:
            return 0
        if d not in self._ranks:
            self._ranks[d] = self.diffs[d].rank()
        return self._ranks[d]

    def cohomology_dim(self, d: int) -> int:
        return self.dim(d) - self.rank_d(d) - self.rank_d(d - 1)

    def check_square_zero(self) -> bool:
        return all((self.diffs[d + 1] @ self.diffs[d]).is_zero()
                   for d in range(len(self.diffs) - 1))


def _cells(M, N, pairs, d, n):
    Nsp = N.weight_spaces()
    out = []
    for S in itertools.combinations(range(len(pairs)), d):
        a = _root_sum(pairs, S, n)
        for c, w in enumerate(M.weights):
            for r in Nsp.get(_add_w(w, a), ()):
                out.append((S, r, c))
    return out


def cochain_complex(M: WeightModule, N: WeightModule, max_degree: int | None = None) -> CochainComplex:
    """Build the complex up to degree ``max_degree + 1``."""
    if M.n != N.n:
        raise ValueError("modules of different rank")
    n = M.n
    pairs, br = _brackets(n)
    top = len(pairs)
    if max_degree is not None:
        top = min(top, max_degree + 1)
    bases = [_cells(M, N, pairs, d, n) for d in range(top + 1)]
    EM = [M.gens[pq] for pq in pairs]
    EN = [N.gens[pq] for pq in pairs]
    EMrows = [E.rows() for E in EM]
    diffs = []
    for d in range(top):
        src, tgt = bases[d], bases[d + 1]
        tidx = {cell: k for k, cell in enumerate(tgt)}
        cols = {}
        for k, (S, r, c) in enumerate(src):
            col: dict = {}

            def put(T, rr, cc, x):
                j = tidx[(T, rr, cc)]
                y = col.get(j, 0) + x
                if y:
                    col[j] = y
                else:
                    col.pop(j, None)

            Sset = set(S)
            # x_t . omega where T = S + {t} and x_t sits at position i of T
            for t in range(len(pairs)):
                if t in Sset:
                    continue
                T = tuple(sorted(S + (t,)))
                i = T.index(t)
                sg = -1 if i % 2 else 1
                for r2, x in EN[t].column(r).items():
                    put(T, r2, c, sg * x)
                for c2, x in EMrows[t][c].items():
                    put(T, r, c2, -sg * x)
            # omega([x_i, x_j], ...) with e_k in S coming from a bracket
            for k_pos, kk in enumerate(S):
                rest = S[:k_pos] + S[k_pos + 1:]
                restset = set(rest)
                for (a, b), (prod, coef) in br.items():
                    if prod != kk or a in restset or b in restset or a == b:
                        continue
                    T = tuple(sorted(rest + (a, b)))
                    if len(set(T)) != len(T):
                        continue
                    i, j = T.index(a), T.index(b)
                    if i > j:
                        continue
                    # sign of moving kk to the front of (kk, rest) vs sorted S
                    rest_T = tuple(x for x in T if x not in (a, b))
                    s1, srt = _sorted_sign((kk,) + rest_T)
                    if srt != S:
                        continue
                    sg = (-1) ** (i + j) * coef * s1
                    put(T, r, c, sg)
            if col:
                cols[k] = col
        diffs.append(SparseMatrix(len(tgt), len(src), cols))
    return CochainComplex(M, N, bases, diffs)


def ext_dims(M: WeightModule, N: WeightModule, max_degree: int) -> list:
    """``[dim Ext^0, ..., dim Ext^max_degree]``."""
    C = cochain_complex(M, N, max_degree)
    return [C.cohomology_dim(d) if d <= C.top else 0 for d in range(max_degree + 1)]


def ext_dim(M: WeightModule, N: WeightModule, i: int) -> int:
    if i < 0:
        raise ValueError("negative Ext degree")
    return ext_dims(M, N, i)[i]


def _cocycle_matrices(C: CochainComplex, vec: dict) -> dict:
    pairs = gen_pairs(C.M.n)
    mats = {pq: {} for pq in pairs}
    for k, x in vec.items():
        (t,), r, c = C.bases[1][k]
        mats[pairs[t]].setdefault(c, {})[r] = x
    return {pq: SparseMatrix(C.N.dim, C.M.dim, cols) for pq, cols in mats.items()}


def ext1_classes(M: WeightModule, N: WeightModule) -> list:
    """Representatives of a basis of ``Ext^1(M, N)``.

    Each class is a dict ``{(p, q): matrix N.dim x M.dim}`` giving the
    cocycle value on ``e_pq``.
    """
    C = cochain_complex(M, N, 1)
    d0 = C.diffs[0]
    if C.top >= 2:
        z, _ = nullspace(C.diffs[1].rows(), C.dim(1))
    else:
        z = [{k: 1} for k in range(C.dim(1))]
    ech = Echelon(d0.cols.values())
    out = []
    for v in z:
        if ech.add(v) is not None:
            out.append(_cocycle_matrices(C, v))
    return out


@dataclass
class Extension:
    """``0 -> N -> X -> M -> 0`` with ``X = N + M`` as graded spaces."""

    module: WeightModule
    inclusion: Morphism
    projection: Morphism


def realize_extension(M: WeightModule, N: WeightModule, cocycle: dict | None) -> Extension:
    """The module with action ``[[E_N, c(e)], [0, E_M]]``."""
    dN, dM = N.dim, M.dim
    d = dN + dM
    gens = {}
    for pq in gen_pairs(M.n):
        ent = [(r, c, x) for r, c, x in N.gens[pq].entries()]
        ent += [(dN + r, dN + c, x) for r, c, x in M.gens[pq].entries()]
        if cocycle:
            ent += [(r, dN + c, x) for r, c, x in cocycle[pq].entries()]
        gens[pq] = SparseMatrix.from_entries(d, d, ent)
    dist = None if M.distinguished is None else dN + M.distinguished
    X = WeightModule(M.n, list(N.weights) + list(M.weights), gens, dist)
    inc = Morphism(N, X, SparseMatrix(d, dN, {k: {k: 1} for k in range(dN)}))
    proj = Morphism(X, M, SparseMatrix(dM, d, {dN + k: {k: 1} for k in range(dM)}))
    return Extension(X, inc, proj)


# ---------------------------------------------------------------------------
# standard and costandard modules

_STD_CACHE: dict = {}


def standard_module(lam) -> WeightModule:
    from .kp import kp_module_gen
    lam = tuple(lam)
    if lam not in _STD_CACHE:
        _STD_CACHE[lam] = kp_module_gen(lam)
    return _STD_CACHE[lam]


_COSTD_CACHE: dict = {}


def costandard_module(lam) -> WeightModule:
    """``nabla(lam) = S_{rho - lam}^* (x) K_rho``."""
    lam = tuple(lam)
    if lam not in _COSTD_CACHE:
        r = rho(len(lam))
        _COSTD_CACHE[lam] = dual_twist(standard_module(tuple(a - b for a, b in zip(r, lam))))
    return _COSTD_CACHE[lam]


def candidate_weights(M: WeightModule) -> list:
    """The finite set of labels relevant to ``M``.

    Lambda_n when every weight of ``M`` lies there; otherwise all weights
    with entries at least the least entry of ``M``, of a degree occurring
    in ``M`` and below some weight of ``M``.
    """
    n = M.n
    supp = M.support()
    if all(in_lambda_n(w) for w in supp):
        return lambda_n(n)
    lo = min(a for w in supp for a in w)
    out = set()
    for deg in {sum(w) for w in supp}:
        total = deg - n * lo
        if total < 0:
            continue
        for cuts in itertools.combinations(range(total + n - 1), n - 1):
            parts, prev = [], -1
            for c in cuts + (total + n - 1,):
                parts.append(c - prev - 1)
                prev = c
            mu = tuple(a + lo for a in parts)
            if any(preceq(mu, w) for w in supp if sum(w) == deg):
                out.add(mu)
    return sorted(out)


def support_ideal(labels: Iterable, universe: Iterable) -> list:
    """The order ideal of ``universe`` generated by ``labels``."""
    labels = [tuple(l) for l in labels]
    return sorted(mu for mu in map(tuple, universe) if any(preceq(mu, l) for l in labels))


def non_maximal(X: Iterable) -> list:
    X = [tuple(x) for x in X]
    return sorted(x for x in X if any(prec(x, y) for y in X))


# ---------------------------------------------------------------------------
# filtrations

@dataclass
class FiltrationLayer:
    label: tuple
    multiplicity: int
    module: WeightModule
    witnesses: list


@dataclass
class Filtration:
    """A standard filtration, listed from the top quotient down.

    ``layers[k]`` is ``Ker(M^{I_k} -> M^{I_{k-1}})`` for the ideals ``I_k``
    cut out along a linear extension of the order; ``chain`` holds spanning
    vectors (in ``M``) of the kernels ``Ker(M -> M^{I_k})``, which decrease
    to 0.
    """

    module: WeightModule
    layers: list
    chain: list

    def labels(self) -> dict:
        out: dict = {}
        for L in self.layers:
            out[L.label] = out.get(L.label, 0) + L.multiplicity
        return out


def _cut_predicate(lam, key):
    deg = sum(lam)
    k = key[lam]

    def pred(mu):
        mu = tuple(mu)
        if sum(mu) != deg:
            return sum(mu) < deg
        if mu in key:
            return key[mu] <= k
        return weight_order(mu, lam, "lt") is True or mu == lam
    return pred


def _layer_is_standard(L: WeightModule, lam) -> tuple:
    """Check ``L = S_lam^m`` generated by its ``lam`` weight space."""
    S = standard_module(lam)
    idx = L.weight_spaces().get(tuple(lam), [])
    m = len(idx)
    if m == 0 or L.dim != m * S.dim:
        return False, []
    H = hom_space(S, L)
    u = S.distinguished
    # values of the basis homs on the generator, as rows over idx
    vals = [{r: h.matrix[r, u] for r in idx if h.matrix[r, u]} for h in H.basis]
    ech = Echelon(vals)
    if ech.rank < m:
        return False, []
    witnesses = []
    for r in idx:
        # combination sending u_lam to the r-th basis vector
        rows = [{k: vals[k].get(rr, 0) for k in range(len(vals)) if vals[k].get(rr, 0)}
                for rr in idx]
        sol = solve(rows, [1 if rr == r else 0 for rr in idx], len(vals))
        if sol is None:
            return False, []
        witnesses.append(H.combine([sol.get(k, 0) for k in range(len(vals))]))
    return True, witnesses


def standard_filtration(M: WeightModule, labels: Iterable | None = None):
    """A standard filtration of ``M`` or None if ``M`` has none.

    Layers are peeled along a linear extension of ``<`` over the weights of
    ``M``; each layer is checked to be a direct sum of standard modules by
    explicit maps from the generator.
    """
    supp = M.support()
    if labels is None:
        labels = supp
    order = order_key(set(map(tuple, labels)) | set(supp))
    cuts = sorted(set(supp), key=lambda lam: order[lam])
    layers, chain = [], []
    for lam in cuts:
        pred = _cut_predicate(lam, order)
        Q, proj = largest_quotient(M, pred)
        # Ker(Q -> Q^{previous cut}) is generated by the lam weight space
        idx = Q.weight_spaces().get(lam, [])
        if idx:
            L, incl = submodule_generated(Q, [{i: 1} for i in idx])
            ok, wit = _layer_is_standard(L, lam)
            if not ok:
                return None
            layers.append(FiltrationLayer(lam, len(idx), L, wit))
        chain.append(proj.kernel())
    if layers and sum(L.module.dim for L in layers) != M.dim:
        return None
    if not layers and M.dim:
        return None
    layers.reverse()
    return Filtration(M, layers, chain)


def filtration_multiplicity(M: WeightModule, lam) -> int:
    """``(M : S_lam) = dim Hom(M, nabla(lam))``."""
    return hom_space(M, costandard_module(lam)).dim


def has_standard_filtration(M: WeightModule, labels: Iterable | None = None) -> bool:
    """``Ext^1(M, nabla(lam)) = 0`` for every candidate label."""
    if labels is None:
        labels = candidate_weights(M)
    return all(ext_dim(M, costandard_module(lam), 1) == 0 for lam in labels)


def _ext1_std_into(M, labels):
    return {lam: ext_dim(standard_module(lam), M, 1) for lam in labels}


def is_tilting(M: WeightModule, labels: Iterable | None = None) -> bool:
    if labels is None:
        labels = candidate_weights(M)
    labels = list(labels)
    if not has_standard_filtration(M, labels):
        return False
    return all(v == 0 for v in _ext1_std_into(M, labels).values())


def defect(M: WeightModule, labels: Iterable | None = None) -> list:
    """The order ideal generated by ``{lam : Ext^1(S_lam, M) != 0}``."""
    if labels is None:
        labels = candidate_weights(M)
    labels = list(labels)
    bad = [lam for lam, v in _ext1_std_into(M, labels).items() if v]
    return support_ideal(bad, labels)


def _pick_max(ws):
    ws = [tuple(w) for w in ws]
    maxima = [w for w in ws if not any(prec(w, v) for v in ws)]
    return max(maxima)


@dataclass
class Envelope:
    module: WeightModule
    injection: Morphism
    steps: list

    def cokernel(self):
        return quotient(self.module, list(self.injection.matrix.cols.values()))


def tilting_envelope(M: WeightModule, labels: Iterable | None = None,
                     check_filtered: bool = True, max_steps: int = 200) -> Envelope:
    """Embed ``M`` into a tilting module by repeated universal extensions.

    Each step extends by ``S_lam`` for the largest ``lam`` in the defect,
    using the first basis class of ``Ext^1(S_lam, X)``.
    """
    if labels is None:
        labels = candidate_weights(M)
    labels = list(labels)
    if check_filtered and not has_standard_filtration(M, labels):
        raise ValueError("tilting envelope needs a module with a standard filtration")
    X = M
    inj = identity_morphism(M)
    steps = []
    for _ in range(max_steps):
        bad = [lam for lam in labels if ext_dim(standard_module(lam), X, 1)]
        if not bad:
            return Envelope(X, inj, steps)
        lam = _pick_max(bad)
        cls = ext1_classes(standard_module(lam), X)
        ext = realize_extension(standard_module(lam), X, cls[0])
        inj = ext.inclusion.compose(inj)
        X = ext.module
        steps.append(lam)
    raise RuntimeError("tilting envelope did not terminate")


@dataclass
class TiltingResolution:
    """``0 -> M -> T_0 -> T_1 -> ... -> T_r -> 0``."""

    module: WeightModule
    terms: list
    maps: list   # maps[0]: M -> T_0, maps[k]: T_{k-1} -> T_k

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def is_exact(self) -> bool:
        dims = [self.module.dim] + [T.dim for T in self.terms]
        ranks = [f.rank() for f in self.maps]
        if ranks[0] != self.module.dim:
            return False
        for k in range(len(self.terms)):
            out_rank = ranks[k + 1] if k + 1 < len(ranks) else 0
            if ranks[k] + out_rank != dims[k + 1]:
                return False
        for f, g in zip(self.maps, self.maps[1:]):
            if not (g.matrix @ f.matrix).is_zero():
                return False
        return True


def tilting_resolution(M: WeightModule, labels: Iterable | None = None,
                       max_length: int = 20) -> TiltingResolution:
    if labels is None:
        labels = candidate_weights(M)
    labels = list(labels)
    env = tilting_envelope(M, labels)
    terms, maps = [env.module], [env.injection]
    C, proj = env.cokernel()
    for _ in range(max_length):
        if C.dim == 0:
            return TiltingResolution(M, terms, maps)
        env = tilting_envelope(C, labels, check_filtered=False)
        maps.append(env.injection.compose(proj))
        terms.append(env.module)
        C, proj = env.cokernel()
    raise RuntimeError("tilting resolution did not terminate")


def indecomposable_by_end(M: WeightModule):
    """True if ``End(M)`` is one-dimensional; None when undecided."""
    return True if hom_space(M, M).dim == 1 else None
