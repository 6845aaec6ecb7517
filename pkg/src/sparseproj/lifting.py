"""Symbolic Newton-Hensel lifting of a zero-dimensional resolution.

Starting from the resolution of the fiber over a chosen parameter point, the
lift extends every coefficient into a truncated power series around that
point, doubling the trusted precision at each step: with the residual vector
G and the Jacobian J of the system with respect to the dependent variables,
both reduced modulo the current minimal polynomial q,

    c    = J(w)^(-1) G(w)            (corrections, one per dependent variable)
    u_j  = w_j - c_j
    rho  = sum_j lambda_j c_j        (shift of the separating-form values)
    q'   = q + (dq/dY * rho mod q)   (roots move by -rho)
    w_j' = u_j + (du_j/dY * rho mod q)

Every step asserts the residual of the previous one (each system polynomial
composed with the current parametrization vanishes modulo q through the
trusted degree) and the separating-form consistency sum lambda_j w_j = Y.

Two cost facts shape the implementation: components below the trusted degree
are exactly zero in all residuals, so the sparse component dicts skip that
work automatically; and the Jacobian inverse is only ever needed through
degree (new precision) - (old precision) - 1, so the adjugate/determinant
solve runs on truncated copies.
"""

from __future__ import annotations

from .rat import rat
from .series import NonUnitSeries, SeriesRing, TruncSeries
from .upoly import UniPoly, upoly_ext_inv


class SingularJacobian(ArithmeticError):
    pass


class LiftingError(ArithmeticError):
    pass


class LiftedResolution:
    """Monic q and parametrizations with truncated-series coefficients."""

    __slots__ = ("lam", "q", "params", "ring")

    def __init__(self, lam, q: UniPoly, params: dict, ring: SeriesRing):
        self.lam = tuple(lam)
        self.q = q
        self.params = dict(params)
        self.ring = ring

    @property
    def precision(self) -> int:
        return self.ring.prec

    def degree(self) -> int:
        return self.q.degree()


def _reringed(p: UniPoly, ring: SeriesRing) -> UniPoly:
    """Move a polynomial's series coefficients into another precision ring."""
    return p.map_coeffs(lambda c: c.truncated(ring.prec, ring)
                        if isinstance(c, TruncSeries) else c)


def _mod_monic(a: UniPoly, q: UniPoly) -> UniPoly:
    """Remainder modulo a monic q without coefficient division."""
    dq = q.degree()
    da = a.degree()
    if da < dq:
        return a
    rem = list(a.coeffs)
    qc = q.coeffs
    for k in range(da - dq, -1, -1):
        c = rem[dq + k]
        if c:
            for i in range(dq):
                rem[i + k] = rem[i + k] - c * qc[i]
        rem[dq + k] = 0
    return UniPoly(rem[:dq])


def _mulmod(a: UniPoly, b: UniPoly, q: UniPoly) -> UniPoly:
    return _mod_monic(a * b, q)


class _SystemEvaluator:
    """Evaluates the system and its Jacobian modulo q with shared power tables."""

    def __init__(self, system, t: int, m: int):
        self.t = t
        self.m = m
        self.system = list(system)
        self.jacobian = [[g.derivative(t + j) for j in range(m)] for g in self.system]

    def bind(self, ring: SeriesRing, w: dict, q: UniPoly):
        return _BoundEvaluator(self, ring, w, q)


class _BoundEvaluator:
    def __init__(self, ev: _SystemEvaluator, ring: SeriesRing, w: dict, q: UniPoly):
        self.ev = ev
        self.ring = ring
        self.w = w
        self.q = q
        self._dep_pow: dict = {}
        self._free_pow: dict = {}
        self._dep_pattern: dict = {}
        self._free_pattern: dict = {}

    def _dep_power(self, j: int, k: int) -> UniPoly:
        got = self._dep_pow.get((j, k))
        if got is None:
            wj = self.w[self.ev.t + j]
            got = wj if k == 1 else _mulmod(self._dep_power(j, k - 1), wj, self.q)
            self._dep_pow[(j, k)] = got
        return got

    def _free_power(self, i: int, k: int) -> TruncSeries:
        got = self._free_pow.get((i, k))
        if got is None:
            xi = self.ring.variable(i)
            got = xi if k == 1 else self._free_power(i, k - 1) * xi
            self._free_pow[(i, k)] = got
        return got

    def _dep_part(self, pattern) -> UniPoly:
        got = self._dep_pattern.get(pattern)
        if got is None:
            got = UniPoly.const(self.ring.constant(1))
            for j, k in enumerate(pattern):
                if k:
                    got = _mulmod(got, self._dep_power(j, k), self.q)
            self._dep_pattern[pattern] = got
        return got

    def _free_part(self, pattern) -> TruncSeries:
        got = self._free_pattern.get(pattern)
        if got is None:
            got = self.ring.constant(1)
            for i, k in enumerate(pattern):
                if k:
                    got = got * self._free_power(i, k)
            self._free_pattern[pattern] = got
        return got

    def eval_poly(self, g) -> UniPoly:
        t = self.ev.t
        acc = UniPoly.zero()
        for e, c in g.terms.items():
            factor = self._free_part(e[:t]) * c
            acc = acc + self._dep_part(e[t:]).map_coeffs(
                lambda s, f=factor: s * f if isinstance(s, TruncSeries) else f * s)
        return _mod_monic(acc, self.q)


def _solve_jacobian(jmat, gvec, q: UniPoly, cut: int, ring: SeriesRing):
    """Solve J c = G mod q via adjugate and determinant.

    The corrections have valuation above the previously trusted degree, so
    the inverse Jacobian only matters through degree ``cut``: determinant,
    adjugate and the modular inverse all run in a ring truncated there,
    which keeps the extended Euclidean arithmetic away from full precision.
    """
    m = len(gvec)
    small = ring.with_prec(cut)
    jc = [[_reringed(x, small) for x in row] for row in jmat]
    qc = _reringed(q, small)

    def det(rows):
        if len(rows) == 1:
            return rows[0][0]
        if len(rows) == 2:
            return _mulmod(rows[0][0], rows[1][1], qc) - _mulmod(rows[0][1], rows[1][0], qc)
        acc = UniPoly.zero()
        for j in range(len(rows)):
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = _mulmod(rows[0][j], det(minor), qc)
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    try:
        d_inv = _reringed(upoly_ext_inv(det(jc), qc), ring)
    except (NonUnitSeries, ZeroDivisionError) as exc:
        raise SingularJacobian("singular Jacobian at the expansion point") from exc

    # adjugate: adj[i][j] = (-1)^{i+j} * minor_{j,i}
    out = []
    for i in range(m):
        acc = UniPoly.zero()
        for j in range(m):
            minor = [row[:i] + row[i + 1:] for k, row in enumerate(jc) if k != j]
            cof = _reringed(det(minor), ring) if m > 1 else UniPoly.const(1)
            term = _mulmod(cof, gvec[j], q)
            acc = acc + term if (i + j) % 2 == 0 else acc - term
        out.append(_mulmod(acc, d_inv, q))
    return out


def newton_hensel_lift(system, base, xi, kappa: int,
                       *, check: bool = True) -> LiftedResolution:
    """Lift a fiber resolution to truncated-series coefficients of order kappa.

    ``system``: m polynomials in t+m variables (free variables first);
    ``base``: resolution of system(xi, .) with simple roots, or an already
    lifted resolution to resume from a lower precision; ``xi``: the
    expansion point (length t).  Raises SingularJacobian when the Jacobian
    is not invertible modulo q at xi, LiftingError on precondition failures.
    """
    xi = tuple(rat(x) for x in xi)
    t = len(xi)
    system = list(system)
    m = len(system)
    if any(g.nvars != t + m for g in system):
        raise ValueError("system must live in t+m variables")

    evaluator = _SystemEvaluator(system, t, m)

    if isinstance(base, LiftedResolution):
        if base.ring.shift != xi:
            raise LiftingError("resumed lift must keep the expansion point")
        lam = base.lam
        ring = base.ring
        q = base.q
        w = dict(base.params)
        prec = base.precision
        if prec >= kappa:
            raise LiftingError("resume precision must be below the target")
    else:
        if base.free_vars:
            raise LiftingError("base resolution must have no free variables")
        if base.degree() < 1:
            raise LiftingError("base resolution has no roots to lift")
        from .upoly import upoly_is_squarefree

        if not upoly_is_squarefree(base.q):
            raise LiftingError("base resolution is not squarefree (simple roots required)")
        lam = base.lam
        ring = SeriesRing(tuple(range(t)), xi, 0)
        q = base.q.map_coeffs(lambda c: ring.constant(c))
        w = {t + j: base.params[j].map_coeffs(lambda c: ring.constant(c))
             for j in range(m)}
        prec = 0
    while prec < kappa:
        new_prec = min(2 * prec + 1, kappa)
        new_ring = ring.with_prec(new_prec)
        q = q.map_coeffs(lambda c: c.truncated(new_prec, new_ring))
        w = {v: p.map_coeffs(lambda c: c.truncated(new_prec, new_ring))
             for v, p in w.items()}
        bound = evaluator.bind(new_ring, w, q)
        gvec = [bound.eval_poly(g) for g in evaluator.system]
        if check:
            _assert_valuation(gvec, prec, "residual from previous step")
        jmat = [[bound.eval_poly(evaluator.jacobian[k][j]) for j in range(m)]
                for k in range(m)]
        cut = new_prec - prec - 1
        cvec = _solve_jacobian(jmat, gvec, q, cut, new_ring)

        rho = UniPoly.zero()
        for j in range(m):
            if lam[j]:
                rho = rho + cvec[j].scale(new_ring.constant(lam[j]))
        rho = _mod_monic(rho, q)

        new_w = {}
        for j in range(m):
            u = w[t + j] - cvec[j]
            new_w[t + j] = u + _mulmod(u.derivative(), rho, q)
        q = q + _mulmod(q.derivative(), rho, q)
        if not q.is_monic():
            raise LiftingError("lifted minimal polynomial lost monicity")
        w = new_w
        ring = new_ring
        prec = new_prec

        if check:
            _assert_lambda_consistency(w, lam, q, t, ring)

    lifted = LiftedResolution(lam, q, w, ring)
    if check and kappa > 0:
        bound = evaluator.bind(ring, w, q)
        gvec = [bound.eval_poly(g) for g in evaluator.system]
        _assert_valuation(gvec, kappa, "final residual")
    return lifted


def _assert_valuation(gvec, through: int, what: str) -> None:
    for k, gpoly in enumerate(gvec):
        for coeff in gpoly.coeffs:
            if isinstance(coeff, TruncSeries):
                if coeff.valuation() <= through:
                    raise LiftingError(
                        f"{what}: equation {k} does not vanish through degree {through}")
            elif coeff:
                raise LiftingError(f"{what}: equation {k} has a nonzero constant residual")


def _assert_lambda_consistency(w, lam, q, t: int, ring: SeriesRing) -> None:
    acc = UniPoly.zero()
    for j, coeff in enumerate(lam):
        if coeff:
            acc = acc + w[t + j].scale(ring.constant(coeff))
    y = UniPoly((ring.zero(), ring.constant(1)))
    diff = _mod_monic(acc - y, q)
    for coeff in diff.coeffs:
        if coeff:
            raise LiftingError("separating-form consistency lost during lifting")
