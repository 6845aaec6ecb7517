"""Exact geometric resolution of the toric zeros of a square system over Q.

The toric solve saturates the ideal with T*X1*...*Xm - 1, computes a graded
Groebner basis, builds the multiplication matrix of the separating form on
the quotient algebra, takes the squarefree part of its characteristic
polynomial as the minimal polynomial q, and recovers each coordinate as a
polynomial in the separating form by solving the linear systems in the power
basis {1, lambda, ..., lambda^(deg q - 1)}.

Detected failure modes are typed so the drivers can retry with fresh random
data: LambdaNotSeparating (the caller picks a new separating form) and
NonGenericInput (the saturated ideal is not zero-dimensional, or a computed
resolution fails its own exactness audit).
"""

from __future__ import annotations

from .groebner import NotZeroDimensional, buchberger, normal_form, quotient_basis
from .linalg import InconsistentSystem, solve_consistent
from .mpoly import SparsePoly
from .rat import RAT_ONE, RAT_ZERO, rat
from .upoly import UniPoly, upoly_mod


class LambdaNotSeparating(ArithmeticError):
    pass


class NonGenericInput(ArithmeticError):
    pass


class GeometricResolution:
    """Separating form lambda, its minimal polynomial q, and parametrizations.

    ``free_vars`` lists the parameter variables (empty for a genuinely
    zero-dimensional resolution, in which case all coefficients are Rat);
    ``dep_vars`` the parametrized ones.  ``lam`` pairs with ``dep_vars``.
    Coefficients of q/params are Rat when free_vars is empty, RatFun in the
    free variables otherwise.
    """

    __slots__ = ("free_vars", "dep_vars", "lam", "q", "params", "warnings")

    def __init__(self, free_vars, dep_vars, lam, q: UniPoly, params: dict,
                 warnings=()):
        self.free_vars = tuple(free_vars)
        self.dep_vars = tuple(dep_vars)
        self.lam = tuple(lam)
        self.q = q
        self.params = dict(params)
        self.warnings = tuple(warnings)

    def degree(self) -> int:
        return self.q.degree()

    def __repr__(self):
        return (f"GeometricResolution(free={self.free_vars}, dep={self.dep_vars}, "
                f"lam={self.lam}, deg={self.degree()})")


def _faddeev_charpoly(m):
    """Characteristic polynomial det(Y*I - M) by Faddeev-LeVerrier.

    Exact over Q (the algorithm divides by integers only).  Coefficients are
    returned lowest degree first, monic.
    """
    n = len(m)
    coeffs = [RAT_ZERO] * n + [RAT_ONE]
    mk = [row[:] for row in m]
    for k in range(1, n + 1):
        tr = sum((mk[i][i] for i in range(n)), RAT_ZERO)
        c = -tr / k
        coeffs[n - k] = c
        if k == n:
            break
        for i in range(n):
            mk[i][i] += c
        nxt = [[sum((m[i][t] * mk[t][j] for t in range(n)), RAT_ZERO)
                for j in range(n)] for i in range(n)]
        mk = nxt
    return UniPoly(coeffs)


def _as_unipoly_sparse(q: UniPoly) -> SparsePoly:
    return SparsePoly(1, {(k,): c for k, c in enumerate(q.coeffs) if c})


def _unipoly_gcd_primitive(a: UniPoly, b: UniPoly) -> SparsePoly:
    """gcd of univariate rational polynomials via the integer primitive PRS.

    The monic Euclidean algorithm over Q suffers severe coefficient growth
    on the characteristic polynomials showing up here; the content-stripped
    pseudo-remainder sequence keeps the integers bounded.
    """
    from .mpoly import mpoly_gcd

    return mpoly_gcd(_as_unipoly_sparse(a), _as_unipoly_sparse(b))


def _squarefree_part(q: UniPoly) -> UniPoly:
    if q.degree() <= 1:
        return q.monic()
    g = _unipoly_gcd_primitive(q, q.derivative())
    if g.is_constant():
        return q.monic()
    quo = _as_unipoly_sparse(q).exact_div(g)
    out = UniPoly([quo.terms.get((k,), RAT_ZERO)
                   for k in range(quo.degree_in(0) + 1)])
    return out.monic()


def _lambda_poly(nvars: int, lam) -> SparsePoly:
    terms = {}
    for v, c in enumerate(lam):
        if c:
            e = [0] * nvars
            e[v] = 1
            terms[tuple(e)] = rat(c)
    return SparsePoly(nvars, terms)


def solve_toric_0d(system, lam, *, on_multiple: str = "raise",
                   check: bool = True) -> GeometricResolution:
    """Geometric resolution of the common toric zeros of a square system.

    ``system``: m polynomials in m variables; ``lam``: integer coefficients
    of the separating form over those variables.  ``on_multiple`` controls
    the policy when the characteristic polynomial of the multiplication
    matrix is not squarefree: "raise" signals LambdaNotSeparating (the
    driver retries with a fresh form), "squarefree" continues with the
    squarefree part and records a warning.
    """
    system = list(system)
    m = system[0].nvars if system else 0
    if len(system) != m:
        raise ValueError("square system required")
    if any(p.nvars != m for p in system):
        raise ValueError("ambient variable count mismatch")
    if any(not p for p in system):
        raise NonGenericInput("zero polynomial in system")
    lam = tuple(int(c) for c in lam)
    if len(lam) != m:
        raise ValueError("lambda length must match variable count")

    # saturate: T * X1...Xm - 1 in m+1 variables, T last
    n1 = m + 1
    sat = [p.embed(list(range(m)), n1) for p in system]
    sat.append(SparsePoly(n1, {tuple([1] * n1): RAT_ONE,
                               (0,) * n1: -RAT_ONE}))
    gb = buchberger(sat)
    try:
        std = quotient_basis(gb, n1)
    except NotZeroDimensional as exc:
        raise NonGenericInput(f"non-generic input: {exc}") from exc

    if not std:
        # saturated ideal is (1): no toric roots
        return GeometricResolution((), tuple(range(m)), lam,
                                   UniPoly.const(RAT_ONE),
                                   {j: UniPoly.zero() for j in range(m)})

    dim = len(std)
    index = {e: i for i, e in enumerate(std)}

    def coords(p: SparsePoly):
        vec = [RAT_ZERO] * dim
        for e, c in p.terms.items():
            vec[index[e]] = c
        return vec

    lam_poly = _lambda_poly(n1, lam)
    std_polys = [SparsePoly(n1, {e: RAT_ONE}, _clean=True) for e in std]
    mult_cols = [coords(normal_form(lam_poly * b, gb)) for b in std_polys]
    mat = [[mult_cols[j][i] for j in range(dim)] for i in range(dim)]

    charpoly = _faddeev_charpoly(mat)
    q = _squarefree_part(charpoly)
    warnings = []
    if q.degree() < dim:
        if on_multiple == "raise":
            raise LambdaNotSeparating(
                f"lambda not separating: char poly degree {dim}, squarefree {q.degree()}")
        warnings.append("multiple-roots: squarefree part of a non-squarefree "
                        "characteristic polynomial")

    # Krylov vectors of lambda powers, then one linear solve per coordinate
    deg = q.degree()
    powers = []
    cur = SparsePoly.const(n1, 1)
    for i in range(deg):
        powers.append(coords(cur))
        cur = normal_form(lam_poly * cur, gb)
    rows = [[powers[j][i] for j in range(deg)] for i in range(dim)]
    params: dict[int, UniPoly] = {}
    for v in range(m):
        xv = normal_form(SparsePoly.variable(n1, v), gb)
        try:
            sol = solve_consistent(rows, coords(xv))
        except InconsistentSystem as exc:
            raise LambdaNotSeparating(
                f"coordinate {v} not expressible in lambda powers") from exc
        params[v] = UniPoly([rat(c) for c in sol])

    res = GeometricResolution((), tuple(range(m)), lam, q, params, warnings)
    if check:
        audit_0d(res, system)
    return res


def audit_0d(res: GeometricResolution, system) -> None:
    """Exactness audit: membership, saturation and consistency identities."""
    q = res.q
    if q.degree() == 0:
        return
    lam_comb = UniPoly.zero()
    for v, c in zip(res.dep_vars, res.lam):
        if c:
            lam_comb = lam_comb + res.params[v].scale(rat(c))
    if upoly_mod(lam_comb - UniPoly((RAT_ZERO, RAT_ONE)), q):
        raise NonGenericInput("lambda inconsistency in resolution")
    if not _unipoly_gcd_primitive(q, q.derivative()).is_constant():
        raise NonGenericInput("minimal polynomial not squarefree")
    for v in res.dep_vars:
        if res.params[v].is_zero() or \
                not _unipoly_gcd_primitive(res.params[v], q).is_constant():
            raise NonGenericInput(f"coordinate {v} vanishes on a root (not toric)")
    for g in system:
        if compose_system_poly(g, res.params, q):
            raise NonGenericInput("system polynomial does not vanish on the resolution")


def compose_system_poly(g: SparsePoly, params: dict, q: UniPoly) -> UniPoly:
    """g with every variable replaced by its parametrization, reduced mod q."""
    tables: dict[tuple[int, int], UniPoly] = {}

    def power(v: int, k: int) -> UniPoly:
        got = tables.get((v, k))
        if got is None:
            if k == 1:
                got = upoly_mod(params[v], q)
            else:
                got = upoly_mod(power(v, k - 1) * params[v], q)
            tables[(v, k)] = got
        return got

    acc = UniPoly.zero()
    for e, c in g.terms.items():
        term = UniPoly.const(c)
        for v, k in enumerate(e):
            if k:
                term = upoly_mod(term * power(v, k), q)
        acc = acc + term
    return upoly_mod(acc, q)


def count_toric_roots(system, lam=None, *, retries: int = 5, seed: int = 0,
                      bound: int = 100) -> int:
    """Number of toric roots = deg q for a successful separating form."""
    import random

    rng = random.Random(seed)
    m = system[0].nvars
    attempts = [tuple(lam)] if lam is not None else []
    while len(attempts) < (1 if lam is not None else retries):
        attempts.append(tuple(_draw_nonzero(rng, bound) for _ in range(m)))
    last: Exception | None = None
    for cand in attempts:
        try:
            # the count only needs deg q; degeneracies still surface as
            # typed failures, so the (expensive) exactness audit is skipped
            return solve_toric_0d(system, cand, check=False).degree()
        except LambdaNotSeparating as exc:
            last = exc
    raise last if last is not None else NonGenericInput("no attempts made")


def _draw_nonzero(rng, bound: int) -> int:
    x = 0
    while x == 0:
        x = rng.randint(-bound, bound)
    return x
