"""Projection pipeline: parametric resolutions, projections, and the driver.

The driver follows the K-Projection recipe at its rational instantiation:
transcendence basis, variable permutation, specialization of the trailing
basis variables at a random point b, a parametric toric resolution of the
specialized system (fiber solve, Newton-Hensel lift, rational
reconstruction), and finally the projection step that rewrites the
resolution in terms of a separating form mu on the projected coordinates.

All random draws come from one seeded generator and are recorded in the
result's provenance; any detected failure (non-separating lambda, singular
Jacobian, reconstruction failure, non-primitive mu) triggers a fresh draw of
only the offending vector, up to the retry limit.  Pinned vectors are never
redrawn: a failure attributable to one raises GenericityFailure immediately.
"""

from __future__ import annotations

import random

from .lifting import LiftingError, SingularJacobian, newton_hensel_lift
from .linalg import InconsistentSystem, matrix_rank, solve_consistent
from .mpoly import SparsePoly
from .pade import NoValidApproximant, pade
from .polytope import Support, SupportFamily, mixed_volume
from .rat import RAT_ONE, rat
from .ratfun import RatFun
from .series import NonUnitSeries
from .supports import DegenerateFamily, VarOrder, family_dim_ok, trans_basis
from .upoly import UniPoly, upoly_gcd, upoly_mod
from .zerodim import (
    GeometricResolution,
    LambdaNotSeparating,
    NonGenericInput,
    solve_toric_0d,
)


class GenericityFailure(ArithmeticError):
    pass


class MuNotPrimitive(ArithmeticError):
    pass


DEFAULT_BOUND = 100
DEFAULT_RETRIES = 5


class ProjectionProblem:
    """A system with its target projection width and randomness policy."""

    __slots__ = ("system", "family", "ell", "seed", "bound", "retry_limit",
                 "precision", "lam", "mu", "b", "xi")

    def __init__(self, system, ell: int, *, seed: int = 0, bound: int = DEFAULT_BOUND,
                 retry_limit: int = DEFAULT_RETRIES, precision: int | None = None,
                 lam=None, mu=None, b=None, xi=None):
        system = list(system)
        if not system:
            raise ValueError("empty system")
        n = system[0].nvars
        r = len(system)
        if any(p.nvars != n for p in system):
            raise ValueError("ambient variable count mismatch")
        if any(not p for p in system):
            raise ValueError("zero polynomial in system")
        if r > n:
            raise ValueError("more equations than variables")
        if not 1 <= ell < n:
            raise ValueError("projection width must satisfy 1 <= l < n")
        self.system = system
        self.family = SupportFamily([Support(n, p.support()) for p in system])
        self.ell = ell
        self.seed = seed
        self.bound = bound
        self.retry_limit = retry_limit
        self.precision = precision
        self.lam = tuple(lam) if lam is not None else None
        self.mu = tuple(mu) if mu is not None else None
        self.b = tuple(b) if b is not None else None
        self.xi = tuple(xi) if xi is not None else None

    @property
    def n(self) -> int:
        return self.system[0].nvars

    @property
    def r(self) -> int:
        return len(self.system)


class ProjectionResult:
    """Final resolution plus everything needed to audit and reproduce it."""

    __slots__ = ("order", "dense_image", "parametric", "resolution", "mu",
                 "provenance")

    def __init__(self, order: VarOrder, dense_image: bool, parametric,
                 resolution, mu, provenance: dict):
        self.order = order
        self.dense_image = dense_image
        self.parametric = parametric
        self.resolution = resolution
        self.mu = tuple(mu) if mu is not None else ()
        self.provenance = provenance

    @property
    def free_vars(self):
        return self.order.free_original


def _draw_nonzero(rng, bound: int) -> int:
    x = 0
    while x == 0:
        x = rng.randint(-bound, bound)
    return x


def _draw_positive(rng, bound: int) -> int:
    return rng.randint(1, bound)


def _field_one(t: int):
    return RatFun.from_const(t, 1) if t else RAT_ONE


def _coeff_to_field(c, t: int):
    return RatFun.from_const(t, c) if t else c


def compose_parametric(g: SparsePoly, t: int, params: dict, q: UniPoly) -> UniPoly:
    """g(X_free, params(Y)) reduced mod q, over Q(X_free) (plain Q when t=0)."""
    cache: dict = {}

    def dep_power(v: int, k: int) -> UniPoly:
        got = cache.get((v, k))
        if got is None:
            got = params[v] if k == 1 else upoly_mod(dep_power(v, k - 1) * params[v], q)
            cache[(v, k)] = got
        return got

    acc = UniPoly.zero()
    for e, c in g.terms.items():
        if t:
            scalar = RatFun.from_poly(SparsePoly.monomial(t, e[:t], c))
        else:
            scalar = c
        term = UniPoly.const(scalar)
        for j, k in enumerate(e[t:]):
            if k:
                term = upoly_mod(term * dep_power(t + j, k), q)
        acc = acc + term
    return upoly_mod(acc, q)


# -- parametric toric resolution ----------------------------------------------


def system_family(system) -> SupportFamily:
    n = system[0].nvars
    return SupportFamily([Support(n, p.support()) for p in system])


def lift_precision(system, t: int) -> int:
    """Degree bound MV(S, Delta^(t)) for the coefficient fractions.

    This is the degree of the toric variety over the free variables, so
    numerators and denominators of the resolution coefficients stay below
    it and a series precision of twice the bound suffices to reconstruct.
    """
    n = system[0].nvars
    members = [Support(n, p.support()) for p in system] + [Support.simplex(n)] * t
    return mixed_volume(SupportFamily(members))


def _resolution_from_lift(lifted, degree_bound: int, t: int, lam) -> GeometricResolution:
    """Pade-reconstruct every series coefficient into a RatFun resolution."""
    from .series import TruncSeries

    def rebuild(upoly: UniPoly) -> UniPoly:
        coeffs = []
        for c in upoly.coeffs:
            if isinstance(c, TruncSeries):
                coeffs.append(pade(c, degree_bound))
            else:
                coeffs.append(RatFun.from_const(t, c))
        return UniPoly(coeffs)

    q = rebuild(lifted.q)
    params = {v: rebuild(p) for v, p in lifted.params.items()}
    dep_vars = tuple(sorted(lifted.params))
    return GeometricResolution(tuple(range(t)), dep_vars, lam, q, params)


def parametric_toric_geomres(system, t: int, lam=None, *, xi=None,
                             kappa: int | None = None,
                             degree_bound: int | None = None,
                             seed: int = 0, rng=None,
                             bound: int = DEFAULT_BOUND,
                             retry_limit: int = DEFAULT_RETRIES,
                             check: bool = True) -> GeometricResolution:
    """Geometric resolution of the toric zeros with X_0..X_{t-1} free.

    ``system``: m polynomials in t+m variables, free variables first; the
    free block must be algebraically independent modulo the saturated ideal
    (the driver guarantees this via the transcendence basis).  Retries draw
    only the failing vector; pinned lambda/xi fail immediately.
    """
    system = list(system)
    m = len(system)
    if any(g.nvars != t + m for g in system):
        raise ValueError("system must have t+m variables")
    if rng is None:
        rng = random.Random(seed)

    mv = None
    if kappa is None or degree_bound is None:
        mv = lift_precision(system, t)
    if degree_bound is None:
        degree_bound = mv
    if kappa is None:
        kappa = 2 * mv

    lam_pinned = lam is not None
    xi_pinned = xi is not None
    cur_lam = tuple(lam) if lam_pinned else None
    cur_xi = tuple(xi) if xi_pinned else None
    failures: list[str] = []

    for _ in range(retry_limit + 1):
        if cur_lam is None:
            cur_lam = tuple(_draw_nonzero(rng, bound) for _ in range(m))
        if t == 0:
            return solve_toric_0d(system, cur_lam, check=check)
        if cur_xi is None:
            cur_xi = tuple(_draw_positive(rng, bound) for _ in range(t))
        try:
            specialized = [
                g.eval_partial({i: cur_xi[i] for i in range(t)}).reindex(
                    list(range(t, t + m)))
                for g in system
            ]
            if any(not g for g in specialized):
                raise NonGenericInput("system polynomial vanished at the sample point")
            base = solve_toric_0d(specialized, cur_lam, check=check)
            if base.degree() == 0:
                raise NonGenericInput("no toric roots over the sample point")
            lifted = newton_hensel_lift(system, base, cur_xi, kappa, check=check)
            res = _resolution_from_lift(lifted, degree_bound, t, cur_lam)
            if check:
                audit_parametric(res, system, t)
            return res
        except LambdaNotSeparating as exc:
            failures.append(str(exc))
            if lam_pinned:
                raise GenericityFailure(
                    f"genericity failure with pinned lambda: {exc}") from exc
            cur_lam = None
        except (SingularJacobian, NonUnitSeries, NoValidApproximant,
                NonGenericInput, LiftingError) as exc:
            failures.append(str(exc))
            if xi_pinned:
                raise GenericityFailure(
                    f"genericity failure with pinned xi: {exc}") from exc
            cur_xi = None
    raise GenericityFailure("genericity failure after retries: " + "; ".join(failures))


def audit_parametric(res: GeometricResolution, system, t: int) -> None:
    """Membership identity f_j(X_free, params(Y)) = 0 mod q, exactly."""
    for k, g in enumerate(system):
        if compose_parametric(g, t, res.params, res.q):
            raise NonGenericInput(
                f"membership identity failed for equation {k} (reconstruction audit)")


# -- projection of a resolution ------------------------------------------------


def geom_res_proj(res: GeometricResolution, projected_vars, mu,
                  *, probabilistic_rank: bool = False) -> GeometricResolution:
    """Resolution of the projection onto (free vars + projected_vars).

    ``mu``: integer coefficients over ``projected_vars`` (a separating form
    of the projected points).  Raises MuNotPrimitive when some projected
    coordinate is not a polynomial in mu (rank defect in the linear solves).

    The power-matrix rank is computed exactly over the coefficient field by
    default; ``probabilistic_rank=True`` instead evaluates the columns at a
    random rational point first (the cheaper variant -- a wrong guess is
    still caught by the exact linear solves and the final verification).
    """
    projected_vars = tuple(projected_vars)
    mu = tuple(int(c) for c in mu)
    if len(mu) != len(projected_vars):
        raise ValueError("mu length must match the projected variables")
    if not any(mu):
        raise MuNotPrimitive("mu is identically zero")
    missing = [v for v in projected_vars if v not in res.params]
    if missing:
        raise ValueError(f"projected variables {missing} not in the resolution")

    t = len(res.free_vars)
    q = res.q
    D = q.degree()
    one = _field_one(t)
    if D == 0:
        return GeometricResolution(res.free_vars, projected_vars, mu,
                                   UniPoly.const(one),
                                   {v: UniPoly.zero() for v in projected_vars},
                                   res.warnings)

    p_mu = UniPoly.zero()
    for v, c in zip(projected_vars, mu):
        if c:
            p_mu = p_mu + res.params[v].scale(_coeff_to_field(rat(c), t))
    p_mu = upoly_mod(p_mu, q)

    def vec(p: UniPoly):
        return [p[k] if p[k] else one - one for k in range(D)]

    colvec = vec
    if probabilistic_rank and t:
        # denominators of all power columns divide products of those of q and
        # p_mu, so a point that is regular for these is regular throughout
        for trial in range(2, 5):
            point = tuple(rat(trial + 2 * i) for i in range(t))
            coeffs = [c for c in (*q.coeffs, *p_mu.coeffs) if isinstance(c, RatFun)]
            if all(c.den.eval_all(point) for c in coeffs):
                def colvec(p: UniPoly, _pt=point):
                    return [p[k].evaluate(_pt) if isinstance(p[k], RatFun)
                            else rat(p[k] or 0) for k in range(D)]
                break

    # Krylov columns of p_mu in K[Y]/q: the first dependent power is delta,
    # and D+1 columns in a D-dimensional space guarantee one exists
    cols = [vec(UniPoly.const(one))]
    rank_cols = [colvec(UniPoly.const(one))]
    powers = [UniPoly.const(one)]
    delta = None
    cur = UniPoly.const(one)
    for k in range(1, D + 1):
        cur = upoly_mod(cur * p_mu, q)
        powers.append(cur)
        cand = rank_cols + [colvec(cur)]
        rows = [[cand[j][i] for j in range(len(cand))] for i in range(D)]
        if matrix_rank(rows) < len(cand):
            delta = k
            break
        cols.append(vec(cur))
        rank_cols.append(cand[-1])

    rows = [[cols[j][i] for j in range(delta)] for i in range(D)]
    try:
        qsol = solve_consistent(rows, vec(powers[delta]))
    except InconsistentSystem as exc:
        raise MuNotPrimitive("mu not primitive for projection (minimal "
                             "polynomial solve inconsistent)") from exc
    q_mu = UniPoly([-x for x in qsol] + [one])

    params = {}
    for v in projected_vars:
        try:
            sol = solve_consistent(rows, vec(upoly_mod(res.params[v], q)))
        except InconsistentSystem as exc:
            raise MuNotPrimitive(
                f"mu not primitive for projection (coordinate {v})") from exc
        params[v] = UniPoly(sol)

    return GeometricResolution(res.free_vars, projected_vars, mu, q_mu, params,
                               res.warnings)


def audit_projection(proj: GeometricResolution, parent: GeometricResolution,
                     projected_vars, mu) -> None:
    """Exact identities q_mu(p_mu) = 0 and v_j(p_mu) = w_j modulo q_lambda."""
    t = len(parent.free_vars)
    q = parent.q
    p_mu = UniPoly.zero()
    for v, c in zip(projected_vars, mu):
        if c:
            p_mu = p_mu + parent.params[v].scale(_coeff_to_field(rat(c), t))
    p_mu = upoly_mod(p_mu, q)
    if _eval_at_upoly(proj.q, p_mu, q):
        raise NonGenericInput("projected minimal polynomial does not annihilate mu")
    for v in projected_vars:
        diff = _eval_at_upoly(proj.params[v], p_mu, q) - parent.params[v]
        if upoly_mod(diff, q):
            raise NonGenericInput(f"projected parametrization for {v} diverges")


def _eval_at_upoly(p: UniPoly, x: UniPoly, q: UniPoly) -> UniPoly:
    acc = UniPoly.zero()
    for c in reversed(p.coeffs):
        acc = upoly_mod(acc * x, q) + UniPoly.const(c)
    return upoly_mod(acc, q)


# -- verification report ---------------------------------------------------------


def _upoly_squarefree(q: UniPoly, t: int) -> bool:
    """Squarefreeness of a monic q with RatFun (or Rat) coefficients.

    Euclidean gcds over a rational function field blow up, so first try to
    certify gcd(q, q') = 1 at a few evaluation points (a specialization can
    only enlarge the gcd, making "coprime there" an exact certificate);
    fall back to an exact gcd over the polynomial ring by clearing
    denominators and treating Y as one more variable.
    """
    if q.degree() <= 0:
        return True
    if t == 0:
        return upoly_gcd(q, q.derivative()).degree() == 0
    for point in ((rat(2),) * t, tuple(rat(3 + i) for i in range(t)),
                  tuple(rat(5 + 2 * i) for i in range(t))):
        try:
            spec = q.map_coeffs(
                lambda c: c.evaluate(point) if isinstance(c, RatFun) else rat(c))
        except ZeroDivisionError:
            continue
        if spec.degree() == q.degree() and \
                upoly_gcd(spec, spec.derivative()).degree() == 0:
            return True
    # exact fallback: clear denominators, gcd in Q[X_1..X_t, Y]
    den = SparsePoly.const(t, 1)
    for c in q.coeffs:
        if isinstance(c, RatFun) and not c.den.is_constant():
            from .mpoly import mpoly_lcm

            den = mpoly_lcm(den, c.den)
    terms: dict = {}
    for k in range(q.degree() + 1):
        c = q[k]
        if not c:
            continue
        if not isinstance(c, RatFun):
            c = RatFun.from_const(t, c)
        scaled = c.num * den.exact_div(c.den)
        for e, v in scaled.terms.items():
            terms[e + (k,)] = v
    big = SparsePoly(t + 1, terms)
    from .mpoly import mpoly_gcd

    g = mpoly_gcd(big, big.derivative(t))
    return g.degree_in(t) == 0


class VerificationReport:
    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = list(entries)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"VerificationReport(passed={self.passed}, entries={self.entries})"


def verify_resolution(res: GeometricResolution, context) -> VerificationReport:
    """Per-identity audit; context is either a system (parametric mode) or a
    (parent_resolution, projected_vars, mu) triple (projected mode)."""
    entries = []
    t = len(res.free_vars)
    if isinstance(context, (list, tuple)) and context and isinstance(context[0], SparsePoly):
        for k, g in enumerate(context):
            ok = not compose_parametric(g, t, res.params, res.q)
            entries.append((f"membership f{k + 1}", ok))
    else:
        parent, projected_vars, mu = context
        q = parent.q
        p_mu = UniPoly.zero()
        for v, c in zip(projected_vars, mu):
            if c:
                p_mu = p_mu + parent.params[v].scale(_coeff_to_field(rat(c), t))
        p_mu = upoly_mod(p_mu, q)
        entries.append(("q_mu(p_mu) = 0 mod q_lambda",
                        not _eval_at_upoly(res.q, p_mu, q)))
        for v in projected_vars:
            diff = _eval_at_upoly(res.params[v], p_mu, q) - parent.params[v]
            entries.append((f"v(p_mu) = w mod q_lambda for X{v + 1}",
                            not upoly_mod(diff, q)))
    entries.append(("q monic", res.q.is_monic()))
    entries.append(("q squarefree", _upoly_squarefree(res.q, t)))
    entries.append(("deg params < deg q",
                    all(p.degree() < max(res.q.degree(), 1) or res.q.degree() == 0
                        for p in res.params.values())))
    return VerificationReport(entries)


# -- end-to-end driver ------------------------------------------------------------


def q_projection(problem: ProjectionProblem) -> ProjectionResult:
    """Geometric resolution of the closure of the projection of V*(f)."""
    n, r, ell = problem.n, problem.r, problem.ell
    rng = random.Random(problem.seed)
    family = problem.family
    if not family_dim_ok(family):
        raise DegenerateFamily("degenerate support family (empty toric variety)")

    tb = trans_basis(family)
    order = VarOrder(tb, n, r, ell)
    t = order.t
    provenance: dict = {
        "seed": problem.seed,
        "transcendence_basis": tuple(i + 1 for i in tb),
        "t": t,
        "order": tuple(i + 1 for i in order.to_original),
    }
    if t == ell:
        return ProjectionResult(order, True, None, None, None, provenance)

    degree_cap = mixed_volume(SupportFamily(
        list(family.members) + [Support.simplex(n)] * (n - r)))
    provenance["degree_cap"] = degree_cap

    spec_vars = order.specialized_original
    if problem.b is not None:
        if len(problem.b) != len(spec_vars):
            raise ValueError(f"b must have {len(spec_vars)} entries")
        b = tuple(int(x) for x in problem.b)
        if any(x == 0 for x in b):
            raise ValueError("b entries must be nonzero")
    else:
        b = tuple(_draw_positive(rng, problem.bound) for _ in spec_vars)
    lam = problem.lam
    if lam is None:
        lam = tuple(_draw_nonzero(rng, problem.bound) for _ in range(r))
    provenance["b"] = b
    provenance["lambda"] = lam

    bindings = {v: rat(val) for v, val in zip(spec_vars, b)}
    frame_positions = list(order.to_original[: t + r])
    specialized = [g.eval_partial(bindings).reindex(frame_positions)
                   for g in problem.system]
    if any(not g for g in specialized):
        raise GenericityFailure("system polynomial vanished after specialization")

    projected_family = SupportFamily(
        [Support(t + r, {tuple(p[i] for i in frame_positions) for p in m.points})
         for m in family.members])
    mv = mixed_volume(SupportFamily(
        list(projected_family.members) + [Support.simplex(t + r)] * t))
    kappa = problem.precision if problem.precision is not None else 2 * mv
    provenance["degree_bound"] = mv
    provenance["precision"] = kappa

    parametric = parametric_toric_geomres(
        specialized, t, lam, xi=problem.xi, kappa=kappa, degree_bound=mv,
        rng=rng, bound=problem.bound, retry_limit=problem.retry_limit)

    proj_frame = tuple(range(t, ell))
    mu_pinned = problem.mu is not None
    mu = tuple(problem.mu) if mu_pinned else None
    attempts = 0
    while True:
        if mu is None:
            mu = tuple(_draw_nonzero(rng, problem.bound) for _ in proj_frame)
        try:
            projected = geom_res_proj(parametric, proj_frame, mu)
            break
        except MuNotPrimitive as exc:
            if mu_pinned:
                raise GenericityFailure(
                    f"genericity failure with pinned mu: {exc}") from exc
            attempts += 1
            if attempts > problem.retry_limit:
                raise GenericityFailure(
                    f"genericity failure drawing mu: {exc}") from exc
            mu = None
    provenance["mu"] = mu
    provenance["mu_attempts"] = attempts

    report = verify_resolution(projected, (parametric, proj_frame, mu))
    if not report.passed:
        raise NonGenericInput(f"verification failed: {report}")
    if projected.degree() > degree_cap:
        raise NonGenericInput(
            f"projected degree {projected.degree()} exceeds the mixed-volume "
            f"bound {degree_cap}")
    provenance["projected_degree"] = projected.degree()

    return ProjectionResult(order, False, parametric, projected, mu, provenance)
