"""Discriminant of a versal family: determinantal part (A) and transform part (B)."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from .algebra.orders import degrevlex
from .algebra.ring import PolyRing
from .groebner import DEFAULT_BUDGET
from .ideals import Ideal, eliminate, intersect, jacobian, minors, positive_grading, saturate, substitute_linear
from .model.presentation import EidsPresentation, PreconditionError, VersalFamily
from .model.tangent import versal_unfolding
from .model.transform import tjurina_transform_general, tjurina_transform_maximal

log = logging.getLogger(__name__)


@dataclass
class DiscriminantResult:
    I_A: Ideal
    I_B: Ideal
    metadata: dict = field(default_factory=dict)

    @property
    def discriminant(self) -> Ideal:
        return intersect(self.I_A, self.I_B)


def parameter_ring(family: VersalFamily) -> PolyRing:
    ps = list(family.parameters)
    return PolyRing(ps, degrevlex(ps) if ps else None, family.ring.field)


def contribution_A(family: VersalFamily, t: int | None = None, budget=DEFAULT_BUDGET) -> Ideal:
    """Eliminate the geometric variables from the (t-1)-minors of the family matrix."""
    t = family.minor_size if t is None else t
    I = minors(family.matrix, t - 1)
    return eliminate(I, family.geometric_vars, budget=budget, stage="contribution_A")


def jacobian_minor_size(family: VersalFamily, minor_size="auto") -> int:
    m, n = family.shape
    if n < m:
        m, n = n, m
    if minor_size == "auto":
        return n
    if minor_size == "printed":
        return n - m + 1
    return int(minor_size)


def _check_maximal(family):
    if family.minor_size != min(family.shape):
        raise PreconditionError("contribution B here needs maximal minors; use the Plücker variant")


def contribution_B(family: VersalFamily, minor_size="auto", I_A: Ideal | None = None, budget=DEFAULT_BUDGET, meta=None) -> Ideal:
    """Sequential variant: I_Tj + Jacobian minors, saturate by <s>, eliminate, saturate by I_A."""
    _check_maximal(family)
    meta = {} if meta is None else meta
    c = jacobian_minor_size(family, minor_size)
    T = tjurina_transform_maximal(family)
    v = list(family.geometric_vars) + list(T.transform_vars)
    J = jacobian(T.ideal.gens, v)
    I = T.ideal + minors(J, c)
    S = T.ring
    irrelevant = Ideal(S, [S.gen(s) for s in T.transform_vars])
    I, it = saturate(I, irrelevant, budget)
    meta["saturation_iterations_s"] = it
    IB = eliminate(I, v, budget=budget, stage="contribution_B")
    if I_A is None:
        I_A = contribution_A(family, budget=budget)
    IB, it = saturate(IB, I_A.to_ring(IB.ring), budget)
    meta["saturation_iterations_A"] = it
    meta["jacobian_minor_size"] = c
    return IB


def transform_strata(family: VersalFamily):
    """Pivots of the strata {s_i = 1, s_j = 0 for j after i} of the projective fibre.

    The transform variables are sorted by decreasing weight when the
    transform ideal admits a positive grading; every stratum ideal is then
    positively graded too.  Returns [(pivot, zero_vars), ...], big chart last.
    """
    T = tjurina_transform_maximal(family)
    svars = list(T.transform_vars)
    w = positive_grading(T.ideal.gens)
    if w is not None:
        svars.sort(key=lambda v: -w[v])
    return [(p, tuple(svars[i + 1:])) for i, p in enumerate(svars)]


def chart_contribution(family: VersalFamily, pivot: str, minor_size="auto", budget=DEFAULT_BUDGET, zero_vars=()) -> Ideal:
    """Contribution B in the chart pivot = 1 restricted to zero_vars = 0, before saturation by I_A."""
    c = jacobian_minor_size(family, minor_size)
    T = tjurina_transform_maximal(family)
    C = T.chart(pivot)
    zero_vars = list(zero_vars)
    v = list(family.geometric_vars) + [s for s in T.transform_vars if s != pivot]
    # solving generators linear in some variable is an isomorphism over the
    # parameters, and each one solved lowers the minor size by one
    gens, solved = substitute_linear(list(C.gens), [w for w in v if w not in zero_vars])
    done = {w for w, _ in solved}
    v = [w for w in v if w not in done]
    c -= len(solved)
    rest = [w for w in C.ring.variables if w not in done]
    S = PolyRing(rest, degrevlex(rest), C.ring.field)
    gens = [g.to_ring(S) for g in gens]
    if c <= 0 or not v:
        return Ideal.unit(parameter_ring(family))
    J = jacobian(gens, v) if gens else None
    I = Ideal(S, gens) + (minors(J, c) if J is not None else Ideal(S, []))
    if zero_vars:
        # restrict to the stratum only after differentiating
        rest2 = [w for w in rest if w not in zero_vars]
        S2 = PolyRing(rest2, degrevlex(rest2), S.field)
        I = Ideal(S2, [g.subs({z: 0 for z in zero_vars}).to_ring(S2) for g in I.gens])
        v = [w for w in v if w not in zero_vars]
        if not v:
            return I.to_ring(parameter_ring(family))
    return eliminate(I, v, budget=budget, stage=f"chart {pivot}")


def contribution_B_charted(family: VersalFamily, minor_size="auto", I_A: Ideal | None = None, budget=DEFAULT_BUDGET, meta=None) -> Ideal:
    """Chart variant: one elimination per stratum of the fibre, intersect, then saturate by I_A."""
    _check_maximal(family)
    meta = {} if meta is None else meta
    strata = transform_strata(family)
    parts = []
    for pivot, zero in strata:
        parts.append(chart_contribution(family, pivot, minor_size, budget, zero))
    IB = parts[-1]
    for p in parts[:-1]:
        IB = intersect(IB, p.to_ring(IB.ring), budget)
    if I_A is None:
        I_A = contribution_A(family, budget=budget)
    IB, it = saturate(IB, I_A.to_ring(IB.ring), budget)
    meta["strata"] = [[p, list(z)] for p, z in strata]
    meta["saturation_iterations_A"] = it
    meta["jacobian_minor_size"] = jacobian_minor_size(family, minor_size)
    return IB


def discriminant(source, charts: bool = True, minor_size="auto", budget=DEFAULT_BUDGET) -> DiscriminantResult:
    """(I_A, I_B) for a user family or an auto-unfolded presentation."""
    meta = {}
    t0 = time.perf_counter()
    if isinstance(source, EidsPresentation):
        family = versal_unfolding(source, budget)
    else:
        family = source
    meta["parameters"] = list(family.parameters)
    meta["family_source"] = family.source
    IA = contribution_A(family, budget=budget)
    meta["time_A"] = time.perf_counter() - t0
    t1 = time.perf_counter()
    if family.minor_size == min(family.shape):
        if charts:
            IB = contribution_B_charted(family, minor_size, IA, budget, meta)
        else:
            IB = contribution_B(family, minor_size, IA, budget, meta)
        meta["variant"] = "charted" if charts else "sequential"
    else:
        IB = contribution_B_general(family, IA, budget, meta)
        meta["variant"] = "plucker"
    meta["time_B"] = time.perf_counter() - t1
    return DiscriminantResult(IA, IB, meta)


def contribution_B_general(family: VersalFamily, I_A: Ideal | None = None, budget=DEFAULT_BUDGET, meta=None) -> Ideal:
    """Non-maximal minors through Plücker charts (experimental)."""
    meta = {} if meta is None else meta
    T = tjurina_transform_general(family)
    parts = []
    for y in T.transform_vars:
        C = T.chart(y)
        v = list(family.geometric_vars) + [z for z in T.transform_vars if z != y]
        # codimension of the chart: rank of the linear system plus relations is not fixed;
        # use the number of variables minus the dimension of the special fibre chart
        Cb = C.basis()
        from .groebner.staircase import krull_dimension

        params = set(family.parameters)
        codim = len(v) + len(params) - krull_dimension(Cb)
        J = jacobian(C.gens, v)
        I = C + minors(J, codim - len(params) if codim > len(params) else codim)
        parts.append(eliminate(I, v, budget=budget, stage=f"plucker chart {y}"))
    IB = parts[0]
    for p in parts[1:]:
        IB = intersect(IB, p.to_ring(IB.ring), budget)
    if I_A is None:
        I_A = contribution_A(family, budget=budget)
    IB, it = saturate(IB, I_A.to_ring(IB.ring), budget)
    meta["charts"] = list(T.transform_vars)
    meta["saturation_iterations_A"] = it
    return IB
