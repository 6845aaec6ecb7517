"""Combinatorics on support families.

Three pieces live here:

* the greedy transcendence-basis search, which walks the variables in order
  and keeps X_k whenever the mixed volume of the test family (supports plus
  one segment {0, e_i} per kept variable plus simplices) stays positive --
  the mixed-volume test is run in the quotient dimension by projecting away
  the candidate variables first, which is an exact reformulation;
* the Gamma decomposition, enumerating the coordinate subsets I whose toric
  pieces cover the affine variety, each with its surviving equation set J_I
  and projected supports;
* coordinate projections of supports and the variable permutation object the
  projection pipeline threads through, so that renamed variables can always
  be reported in the caller's original numbering.

Variable indices are 0-based throughout.
"""

from __future__ import annotations

from itertools import combinations

from .polytope import (
    PolytopeError,
    Support,
    SupportFamily,
    affine_rank,
    mv_positive,
)


class DegenerateFamily(ValueError):
    pass


DEFAULT_GAMMA_CAP = 20


def project_supports(family: SupportFamily, keep) -> SupportFamily:
    """Drop the coordinates outside ``keep`` (0-based, kept in given order)."""
    keep = list(keep)
    if not keep:
        raise ValueError("keep set must be nonempty")
    members = []
    for m in family.members:
        members.append(Support(len(keep), {tuple(p[i] for i in keep) for p in m.points}))
    return SupportFamily(members)


def _project_support(s: Support, keep) -> Support:
    return Support(len(keep), {tuple(p[i] for i in keep) for p in s.points})


def family_dim_ok(family: SupportFamily) -> bool:
    """Standing hypothesis: dim(sum of any subfamily) >= its size."""
    r = len(family.members)
    for size in range(1, r + 1):
        for subset in combinations(range(r), size):
            pts = {(0,) * family.dim}
            for j in subset:
                pts = {tuple(x + y for x, y in zip(p, q))
                       for p in pts for q in family.members[j].points}
            if affine_rank(pts) < size:
                return False
    return True


def trans_basis(family: SupportFamily) -> tuple[int, ...]:
    """Greedy transcendence basis of the toric variety's function field.

    Returns the 0-based indices {i_1 < ... < i_{n-r}}; each prefix is a
    maximal algebraically independent subset of the variables up to its last
    element.  Raises DegenerateFamily when the standing dimension hypothesis
    fails (the toric variety would be empty).
    """
    n = family.dim
    r = len(family.members)
    if r > n:
        raise DegenerateFamily("more equations than variables")
    if not family_dim_ok(family):
        raise DegenerateFamily("degenerate support family (empty toric variety)")
    tb: list[int] = []
    k = 0
    while len(tb) < n - r and k < n:
        candidate = tb + [k]
        keep = [i for i in range(n) if i not in candidate]
        projected = [_project_support(m, keep) for m in family.members]
        simplex_count = n - r - len(candidate)
        members = projected + [Support.simplex(len(keep))] * simplex_count
        if mv_positive(SupportFamily(members)):
            tb.append(k)
        k += 1
    if len(tb) < n - r:
        raise DegenerateFamily("could not complete a transcendence basis")
    return tuple(tb)


def trans_basis_examined(family: SupportFamily) -> list[tuple[int, bool]]:
    """Replay of the greedy search: (variable, accepted) in examination order."""
    n = family.dim
    r = len(family.members)
    out = []
    tb: list[int] = []
    k = 0
    while len(tb) < n - r and k < n:
        candidate = tb + [k]
        keep = [i for i in range(n) if i not in candidate]
        projected = [_project_support(m, keep) for m in family.members]
        members = projected + [Support.simplex(len(keep))] * (n - r - len(candidate))
        ok = mv_positive(SupportFamily(members))
        out.append((k, ok))
        if ok:
            tb.append(k)
        k += 1
    return out


class GammaComponent:
    """One coordinate subset I of the toric cover, with its data."""

    __slots__ = ("zero_set", "active", "projected_family")

    def __init__(self, zero_set: frozenset, active: tuple, projected_family):
        self.zero_set = zero_set              # I: variables set to zero
        self.active = active                  # J_I: surviving equation indices
        self.projected_family = projected_family  # supports of f_I, remaining vars

    def __repr__(self):
        return f"GammaComponent(I={sorted(self.zero_set)}, J={list(self.active)})"

    def __eq__(self, other):
        return (isinstance(other, GammaComponent)
                and self.zero_set == other.zero_set
                and self.active == other.active)


def _gamma_data(family: SupportFamily, zero_set: frozenset):
    """(J_I, projected supports of the surviving equations) for a subset I."""
    active = []
    projected = []
    keep = [i for i in range(family.dim) if i not in zero_set]
    for j, m in enumerate(family.members):
        surviving = {p for p in m.points if all(p[i] == 0 for i in zero_set)}
        if surviving:
            active.append(j)
            if keep:
                projected.append(Support(len(keep), {tuple(p[i] for i in keep)
                                                     for p in surviving}))
    return tuple(active), projected


def _gamma_dim_condition(projected) -> bool:
    for size in range(1, len(projected) + 1):
        for subset in combinations(projected, size):
            pts = [tuple([0] * subset[0].dim)]
            for s in subset:
                pts = [tuple(x + y for x, y in zip(p, q)) for p in pts for q in s.points]
            if affine_rank(set(pts)) < size:
                return False
    return True


def gamma_decomposition(family: SupportFamily, cap: int = DEFAULT_GAMMA_CAP):
    """All subsets I in Gamma, the cover index of the toric decomposition.

    A subset qualifies when (a) every subfamily of the projected surviving
    supports spans enough dimensions, and (b) no subset of I reaches a
    smaller count #J + #I; both conditions are checked literally over all
    subsets (including the empty one).
    """
    n = family.dim
    if n > cap:
        raise PolytopeError(f"ambient dimension {n} exceeds gamma cap {cap}")
    sizes = {}
    data = {}
    subsets = []
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            zs = frozenset(combo)
            active, projected = _gamma_data(family, zs)
            sizes[zs] = len(active) + len(zs)
            data[zs] = (active, projected)
            subsets.append(zs)
    out = []
    for zs in subsets:
        active, projected = data[zs]
        if len(zs) < n and not _gamma_dim_condition(projected):
            continue
        if len(zs) == n and active:
            # no variables survive but some equation does: f_I has a nonzero
            # constant term, the empty point is not a zero
            continue
        target = sizes[zs]
        ok = True
        for size in range(len(zs) + 1):
            for combo in combinations(sorted(zs), size):
                if sizes[frozenset(combo)] < target:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        pf = SupportFamily(projected) if projected else None
        out.append(GammaComponent(zs, active, pf))
    return out


class VarOrder:
    """Permutation between original variable numbering and the pipeline frame.

    Frame layout: positions 0..t-1 free variables, t..t+r-1 dependent
    variables (the first l-t of them are the projected ones), t+r..n-1 the
    specialized trailing basis variables.
    """

    __slots__ = ("to_original", "to_frame", "t", "r", "ell")

    def __init__(self, tb, n: int, r: int, ell: int):
        tb = list(tb)
        free = [i for i in tb if i < ell]
        dep_proj = [i for i in range(ell) if i not in set(tb)]
        dep_rest = [i for i in range(ell, n) if i not in set(tb)]
        spec = [i for i in tb if i >= ell]
        t = len(free)
        if len(dep_proj) > r:
            raise DegenerateFamily("projected block needs more than r dependents")
        order = free + dep_proj + dep_rest + spec
        if len(order) != n:
            raise AssertionError("permutation does not cover all variables")
        self.to_original = tuple(order)      # frame position -> original index
        self.to_frame = tuple(order.index(i) for i in range(n))
        self.t = t
        self.r = r
        self.ell = ell

    @property
    def free_original(self):
        return self.to_original[: self.t]

    @property
    def dependent_original(self):
        return self.to_original[self.t: self.t + self.r]

    @property
    def projected_original(self):
        return self.to_original[self.t: self.ell]

    @property
    def specialized_original(self):
        return self.to_original[self.t + self.r:]
