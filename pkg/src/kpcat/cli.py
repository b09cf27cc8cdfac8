"""Command-line interface: ``kpcat <subcommand> ...``.

Exit codes: 0 on success, 1 when a verification fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cache import Cache
from .perm import Permutation, conjugate_w0, in_lambda_n
from .schubert import poly_from_json, poly_to_json, schubert_expand, schubert_poly
from .weightmod import (ValidationError, character, hom_space, is_isomorphic,
                        module_from_json, module_to_json, tensor, validate)
from .kp import kp_module, tilting_module
from .homological import ext_dims, standard_filtration
from .ringel import (conjecture_dims, restricted_tensor, ringel_F,
                     verify_ext_symmetry, verify_hw_axioms, verify_theorem_4_1,
                     verify_theorem_5_1)


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _perm(text: str, n: int) -> Permutation:
    try:
        w = Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not w.in_S(n):
        raise UsageError(f"{text} is not in S_{n}")
    return w


def _weight(text: str, n: int) -> tuple:
    try:
        lam = tuple(int(a) for a in text.split(","))
    except ValueError:
        raise UsageError(f"bad weight: {text!r}") from None
    if len(lam) != n or not in_lambda_n(lam):
        raise UsageError(f"{text} is not in Lambda_{n}")
    return lam


def _load_json(text: str):
    """Parse ``text`` as JSON, or read it from the file it names."""
    try:
        if text.lstrip().startswith("{"):
            return json.loads(text)
        return json.loads(Path(text).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read JSON from {text!r}: {exc}") from None


def _module(text: str, n: int):
    try:
        M = module_from_json(_load_json(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if M.n != n:
        raise UsageError(f"module has n={M.n}, expected {n}")
    bad = validate(M)
    if bad:
        raise UsageError(f"invalid module: {bad[0]}")
    return M


def _expansion_json(exp: dict, n: int) -> dict:
    return {w.one_line(n): str(c) for w, c in sorted(exp.items())}


def _expansion_text(exp: dict, n: int) -> str:
    if not exp:
        return "0"
    parts = []
    for w, c in sorted(exp.items()):
        parts.append(("" if c == 1 else f"{c}*") + f"S[{w.one_line(n)}]")
    return " + ".join(parts)


def _kp_payload(cache: Cache, w: Permutation, n: int) -> dict:
    return cache.cached("kp", {"n": n, "perm": w.one_line(n)},
                        lambda: module_to_json(kp_module(w, n)))


# ---------------------------------------------------------------------------
# subcommands

def cmd_schubert(a, cache):
    w = _perm(a.perm, a.n)
    f = schubert_poly(w, a.n)
    return _dump(poly_to_json(f)) if a.json else str(f)


def cmd_kp(a, cache):
    w = _perm(a.perm, a.n)
    payload = _kp_payload(cache, w, a.n)
    M = module_from_json(payload)
    if a.json:
        return _dump(payload)
    if a.dims:
        return str(M.dim)
    if a.char:
        return str(character(M))
    return f"dim {M.dim}\nchar {character(M)}"


def cmd_tilting(a, cache):
    lam = _weight(a.lam, a.n)

    def compute():
        T = tilting_module(lam)
        F = standard_filtration(T)
        labels = {",".join(map(str, k)): v for k, v in sorted(F.labels().items())} if F else None
        return {"format": 1, "lambda": list(lam), "dim": T.dim,
                "char": poly_to_json(character(T)), "filtration": labels,
                "module": module_to_json(T)}

    out = cache.cached("tilting", {"n": a.n, "lambda": list(lam)}, compute)
    if a.json:
        return _dump(out)
    lines = [f"dim {out['dim']}", f"char {poly_from_json(out['char'])}"]
    for k, v in (out["filtration"] or {}).items():
        lines.append(f"S({k}) x {v}")
    return "\n".join(lines)


def _module_arg(a, cache):
    if a.module:
        return _module(a.module, a.n)
    if a.perm:
        return module_from_json(_kp_payload(cache, _perm(a.perm, a.n), a.n))
    raise UsageError("give --perm or --module")


def cmd_char(a, cache):
    f = character(_module_arg(a, cache))
    return _dump(poly_to_json(f)) if a.json else str(f)


def cmd_expand(a, cache):
    if a.poly:
        try:
            f = poly_from_json(_load_json(a.poly))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        f = character(_module_arg(a, cache))
    try:
        exp = schubert_expand(f)
    except Exception as exc:  # not a nonnegative Schubert combination
        raise UsageError(f"cannot expand: {exc}") from None
    n = max([a.n] + [len(w.window) for w in exp])
    if a.json:
        return _dump({"format": 1, "n": n, "expansion": _expansion_json(exp, n)})
    return _expansion_text(exp, n)


def cmd_hom(a, cache):
    w, v = _perm(a.src, a.n), _perm(a.dst, a.n)
    d = hom_space(kp_module(w, a.n), kp_module(v, a.n)).dim
    if a.json:
        return _dump({"format": 1, "n": a.n, "from": w.one_line(a.n),
                      "to": v.one_line(a.n), "dim": d})
    return str(d)


def cmd_ext(a, cache):
    w, v = _perm(a.src, a.n), _perm(a.dst, a.n)
    if a.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    args = {"n": a.n, "from": w.one_line(a.n), "to": v.one_line(a.n), "max_degree": a.max_degree}
    dims = cache.cached("ext", args, lambda: ext_dims(kp_module(w, a.n), kp_module(v, a.n), a.max_degree))
    if a.json:
        return _dump({"format": 1, **args, "ext": dims})
    return "\n".join(f"Ext^{i} = {d}" for i, d in enumerate(dims))


def cmd_filtration(a, cache):
    M = _module(a.module, a.n)
    F = standard_filtration(M)
    labels = None if F is None else {",".join(map(str, k)): v for k, v in sorted(F.labels().items())}
    if a.json:
        return _dump({"format": 1, "n": a.n, "filtered": F is not None, "labels": labels})
    if F is None:
        return "no standard filtration"
    return "\n".join(f"S({k}) x {v}" for k, v in labels.items())


def cmd_dual(a, cache):
    w = _perm(a.perm, a.n)
    wb = conjugate_w0(w, a.n)
    FM, _ = ringel_F(kp_module(w, a.n))
    iso = is_isomorphic(FM, kp_module(wb, a.n)) is not None
    if a.json:
        return _dump({"format": 1, "n": a.n, "perm": w.one_line(a.n), "dual": wb.one_line(a.n),
                      "dim": FM.dim, "char": poly_to_json(character(FM)), "isomorphic": iso})
    return f"F(S[{w.one_line(a.n)}]) = S[{wb.one_line(a.n)}]" if iso else \
        f"F(S[{w.one_line(a.n)}]) has character {character(FM)}"


def cmd_tensor(a, cache):
    w, v = _perm(a.left, a.n), _perm(a.right, a.n)
    M, N = kp_module(w, a.n), kp_module(v, a.n)
    X = restricted_tensor(M, N) if a.restricted else tensor(M, N)
    exp = schubert_expand(character(X))
    if a.json:
        return _dump({"format": 1, "n": a.n, "restricted": a.restricted, "dim": X.dim,
                      "expansion": _expansion_json(exp, a.n), "module": module_to_json(X)})
    return f"dim {X.dim}\n{_expansion_text(exp, a.n)}"


def cmd_conjecture(a, cache):
    if a.n < 1 or a.k < 1:
        raise UsageError("--n and --k must be positive")
    r = conjecture_dims(a.n, a.k, graded=a.graded)
    out = {"format": 1, **r.to_json()}
    if a.json:
        return _dump(out), 0 if r.ok else 1
    lines = [f"dim {r.dim} (expected {r.expected})"]
    if a.graded:
        lines.append(f"graded {r.graded} (expected {r.expected_graded})")
    return "\n".join(lines), 0 if r.ok else 1


SUITES = {
    "axioms": verify_hw_axioms,
    "ringel": verify_theorem_4_1,
    "tensor-dual": verify_theorem_5_1,
    "ext-symmetry": verify_ext_symmetry,
}


def cmd_verify(a, cache):
    rep = SUITES[a.suite](a.n)
    code_ = 0 if rep.ok else 1
    if a.json:
        return _dump({"format": 1, "n": a.n, **rep.to_json()}), code_
    lines = [("PASS " if c["ok"] else "FAIL ") + c["check"] for c in rep.checks]
    lines.append(f"{a.suite}: {'all passed' if rep.ok else f'{len(rep.failures())} failed'}")
    return "\n".join(lines), code_


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kpcat")
    p.add_argument("--no-cache", action="store_true", help="bypass the on-disk cache")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--json", action="store_true")
        s.set_defaults(fn=fn)
        return s

    s = add("schubert", cmd_schubert, "Schubert polynomial of a permutation")
    s.add_argument("--perm", required=True)
    s = add("kp", cmd_kp, "Kraskiewicz-Pragacz module")
    s.add_argument("--perm", required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--char", action="store_true")
    g.add_argument("--dims", action="store_true")
    s = add("tilting", cmd_tilting, "indecomposable tilting module T(lambda)")
    s.add_argument("--lambda", dest="lam", required=True)
    s = add("char", cmd_char, "character of a module")
    s.add_argument("--perm")
    s.add_argument("--module")
    s = add("expand", cmd_expand, "Schubert expansion of a polynomial or character")
    s.add_argument("--poly", help="polynomial JSON (inline or file)")
    s.add_argument("--perm")
    s.add_argument("--module")
    for name, fn, h in (("hom", cmd_hom, "dim Hom(S_w, S_v)"), ("ext", cmd_ext, "dims Ext^i(S_w, S_v)")):
        s = add(name, fn, h)
        s.add_argument("--from", dest="src", required=True)
        s.add_argument("--to", dest="dst", required=True)
    s.add_argument("--max-degree", type=int, default=2)
    s = add("filtration", cmd_filtration, "standard filtration of a module")
    s.add_argument("--module", required=True)
    s = add("dual", cmd_dual, "Ringel dual of S_w")
    s.add_argument("--perm", required=True)
    s = add("tensor", cmd_tensor, "tensor product of two KP modules")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--restricted", action="store_true")
    s = add("conjecture", cmd_conjecture, "dimension of (T^k)^Lambda_n")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--graded", action="store_true")
    s = add("verify", cmd_verify, "run a verification suite")
    s.add_argument("--suite", choices=sorted(SUITES), required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if a.n < 1:
        print("kpcat: --n must be positive", file=sys.stderr)
        return 2
    cache = Cache(enabled=not a.no_cache)
    try:
        res = a.fn(a, cache)
    except (UsageError, ValidationError) as exc:
        print(f"kpcat: {exc}", file=sys.stderr)
        return 2
    code_ = 0
    if isinstance(res, tuple):
        res, code_ = res
    print(res)
    return code_


if __name__ == "__main__":
    sys.exit(main())
