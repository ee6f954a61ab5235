"""Invariants of the Tjurina transform and the split of the tangent space."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra.matrix import PolyMatrix
from .algebra.orders import blocks, degrevlex
from .algebra.poly import Vector
from .algebra.ring import PolyRing
from .algebra.fields import GF
from .groebner import DEFAULT_BUDGET, INFINITE, ResourceExhausted, graded_slice_dim, quotient_dim, std_basis
from .groebner.staircase import monomials_of_degree
from .ideals import Ideal, eliminate, jacobian, minors, saturate
from .model.presentation import EidsPresentation, PreconditionError, presentation_from_strings
from .model.tangent import tau_g
from .model.transform import tjurina_transform_maximal


def _presentation(obj) -> EidsPresentation:
    if isinstance(obj, EidsPresentation):
        return obj
    if isinstance(obj, PolyMatrix):
        return EidsPresentation(obj, min(obj.shape), obj.ring.variables)
    raise TypeError("expected a matrix or a presentation")


def _oriented(E: EidsPresentation):
    M = E.matrix
    if not E.is_maximal:
        raise PreconditionError("maximal minors required")
    if M.n < M.m:
        M = M.transpose()
    return M


def _t1_module(gens, variables, ring):
    """Generators of the T^1 module O^n/(Jacobian columns + I O^n) of a complete intersection."""
    n = len(gens)
    V = ring.with_rank(n)
    out = []
    for v in variables:
        col = [g.diff(v) for g in gens]
        if any(col):
            out.append(Vector.from_components(V, col))
    for j in range(n):
        e = Vector.unit(V, j)
        for g in gens:
            out.append(g * e)
    return V, out


def _power_generators(V, local_vars, D):
    R = V.base_ring
    out = []
    for e in monomials_of_degree(len(local_vars), D):
        mono = R.one()
        for v, a in zip(local_vars, e):
            if a:
                mono = mono * R.gen(v) ** a
        for j in range(V.rank):
            out.append(mono * Vector.unit(V, j))
    return out


def localized_colength(mod, V, local_vars, budget=DEFAULT_BUDGET, stage="colength", start=2, max_power=200, count=quotient_dim):
    """Sum of the colengths of ``mod`` at the points of V(local_vars), or INFINITE.

    Adds P^D F for P the ideal of the local variables and raises D until two
    consecutive counts agree.  At each point P lies in the maximal ideal, so
    P^D Q = P^(D+1) Q forces P^D Q = 0 there (Nakayama) and the count is the
    true colength; points off V(P) are cut away by P^D.  ``count`` maps a
    basis to the dimension wanted (the whole quotient by default).
    """
    prev = None
    for D in range(start, max_power + 1):
        B = std_basis(list(mod) + _power_generators(V, local_vars, D), V, budget=budget, stage=stage)
        d = count(B)
        if d is INFINITE:
            return INFINITE
        if d == prev:
            return d
        prev = d
    raise ResourceExhausted(f"no stable colength up to power {max_power}", stage)


# two large primes for dimension counts; a disagreement sends the count to Q
COUNT_PRIMES = (2147483629, 2147483587)


def modular_count(compute, field):
    """Run ``compute(field)`` modulo two primes and accept a common value; otherwise use ``field``.

    Dimension counts over Q and over F_p agree for all but finitely many p;
    working modulo p avoids coefficient growth.
    """
    if field.char:
        return compute(field)
    vals = []
    for q in COUNT_PRIMES:
        try:
            vals.append(compute(GF(q)))
        except ZeroDivisionError:
            vals.append(None)
    if vals[0] is not None and vals[0] == vals[1]:
        return vals[0]
    return compute(field)


def transform_chart_taus(matrix, budget=DEFAULT_BUDGET, modular: bool = True) -> list:
    """Tjurina numbers of the transform summed per stratum of the projective fibre.

    Stratum i is {s_i = 1, s_j = 0 for j > i} over x = 0.  In the chart
    s_i = 1 the T^1 module of the complete intersection is localised at the
    stratum by :func:`localized_colength`.  The list runs from the last
    stratum (the big affine chart) to the first (a single point).
    """
    E = _presentation(matrix)
    M = _oriented(E)
    T = tjurina_transform_maximal(EidsPresentation(M, min(M.shape), E.geometric_vars))
    geo = list(E.geometric_vars)
    svars = list(T.transform_vars)
    out = []
    for i in reversed(range(len(svars))):
        pivot = svars[i]
        rest = svars[:i] + geo + svars[i + 1:]
        local = geo + svars[i + 1:]

        def count(F, pivot=pivot, rest=rest, local=local):
            R = PolyRing(rest, degrevlex(rest), F)
            gens = [g.subs({pivot: 1}).to_ring(R) for g in T.ideal.gens]
            V, mod = _t1_module(gens, rest, R)
            return localized_colength(mod, V, local, budget, stage=f"transform tau, chart {pivot}")

        out.append(modular_count(count, E.ring.field) if modular else count(E.ring.field))
    return out


def transform_tjurina_sum(matrix, budget=DEFAULT_BUDGET):
    """Sum of tau(Y, p) over the singular points of the transform Y (all above the origin)."""
    parts = transform_chart_taus(matrix, budget)
    if any(p is INFINITE for p in parts):
        return INFINITE
    return sum(parts)


def tangent_slice_dim(matrix, budget=DEFAULT_BUDGET, modular: bool = True):
    """dim of the (s,t)-degree-1 part of (C[s,t]{x})^n / K for a 2 x n matrix.

    K holds the x-derivative columns of the transform's Jacobian, the s- and
    t-multiples of its s- and t-derivative columns and I_Tj times the free
    module.  The degree-1 part is a module over the x-variables, localised at
    x = 0 as in :func:`localized_colength`.
    """
    E = _presentation(matrix)
    M = _oriented(E)
    if M.m != 2:
        raise PreconditionError("the graded tangent module is implemented for two-row matrices")
    T = tjurina_transform_maximal(EidsPresentation(M, 2, E.geometric_vars))
    s, t = T.transform_vars
    geo = list(E.geometric_vars)
    names = [s, t] + geo

    def compute(F):
        R = PolyRing(names, degrevlex(names), F)
        gens = [g.to_ring(R) for g in T.ideal.gens]
        n = len(gens)
        V = R.with_rank(n)
        mod = []
        for v in geo:
            mod.append(Vector.from_components(V, [g.diff(v) for g in gens]))
        for v in (s, t):
            col = Vector.from_components(V, [g.diff(v) for g in gens])
            for w in (s, t):
                mod.append(R.gen(w) * col)
        for j in range(n):
            e = Vector.unit(V, j)
            for g in gens:
                mod.append(g * e)
        mod = [x for x in mod if x]
        return localized_colength(
            mod, V, geo, budget, stage="graded tangent module", count=lambda B: graded_slice_dim(B, [s, t], 1)
        )

    return modular_count(compute, E.ring.field) if modular else compute(E.ring.field)


@dataclass(frozen=True)
class SplitDims:
    tau_X: object
    tau_Y_total: object
    h1: object


def h1_split(matrix, budget=DEFAULT_BUDGET) -> SplitDims:
    """(tau_X, sum of tau(Y,p), their difference dim H^1(Y, T_Y))."""
    E = _presentation(matrix)
    tx = tau_g(E, budget)
    ty = transform_tjurina_sum(E, budget)
    if tx is INFINITE or ty is INFINITE:
        raise PreconditionError("infinite Tjurina number: the singularity is not isolated")
    return SplitDims(tx, ty, tx - ty)


def milnor_via_transform(matrix, assume_quasihomogeneous_points: bool = False, budget=DEFAULT_BUDGET) -> int:
    """1 + sum tau(Y, p), valid when every transform singularity is quasihomogeneous.

    The quasihomogeneity is not checked; without the flag this refuses.
    """
    if not assume_quasihomogeneous_points:
        raise PreconditionError(
            "mu via the transform needs quasihomogeneous transform singularities; "
            "pass assume_quasihomogeneous_points=True to assert it"
        )
    E = _presentation(matrix)
    if E.shape not in ((2, 3), (3, 2)):
        raise PreconditionError("mu via the transform is implemented for type (2,3,2)")
    ty = transform_tjurina_sum(E, budget)
    if ty is INFINITE:
        raise PreconditionError("transform singularities are not isolated")
    return 1 + ty


def gamma_invariant(matrix, budget=DEFAULT_BUDGET) -> int:
    """tau - (b3 - b2) for a (2,3,2) 3-fold, with b2 = 1 and b3 = sum tau(Y, p)."""
    E = _presentation(matrix)
    if E.shape not in ((2, 3), (3, 2)) or E.ambient_dim != 5:
        raise PreconditionError("gamma is defined here for 3-folds of type (2,3,2) in C^5")
    s = h1_split(E, budget)
    return s.tau_X - s.tau_Y_total + 1


def hilbert_burch_point_count(l_degrees, k_degrees) -> int:
    """(sum l_i^2 - sum k_i^2) / 2 for a Hilbert-Burch resolution of points in P^2."""
    l_degrees = [abs(int(v)) for v in l_degrees]
    k_degrees = [abs(int(v)) for v in k_degrees]
    if len(k_degrees) != len(l_degrees) + 1:
        raise PreconditionError("need t syzygy degrees and t+1 generator degrees")
    num = sum(v * v for v in l_degrees) - sum(v * v for v in k_degrees)
    if num % 2:
        raise PreconditionError("odd numerator: not a valid resolution")
    if num < 0:
        raise PreconditionError("negative point count")
    return num // 2


def counterexample_matrix(k: int, l: int) -> EidsPresentation:
    return presentation_from_strings(
        [["z+x", "y", f"x^{k}+w^2"], [f"w^{l}", "z", "y"]], ["x", "y", "z", "w"], 2
    )


@dataclass(frozen=True)
class CounterexampleReport:
    k: int
    l: int
    tau: int
    mu: int
    wahl_equality: bool
    transform_singularity_types: tuple  # (stratum label, tau) per chart

    @property
    def chart_taus(self) -> tuple:
        return tuple(t for _, t in self.transform_singularity_types)


def counterexample_verify(k: int, l: int, budget=DEFAULT_BUDGET) -> CounterexampleReport:
    """tau, mu (via the transform, its points being quasihomogeneous) and the chart taus."""
    if k < 3 or l < 3:
        raise PreconditionError("the family needs k, l >= 3")
    E = counterexample_matrix(k, l)
    tau = tau_g(E, budget)
    parts = transform_chart_taus(E, budget)
    if tau is INFINITE or any(p is INFINITE for p in parts):
        raise PreconditionError("non-isolated singularity")
    labels = ("chart s2=1", "point s1=1, s2=0")
    types = tuple(zip(labels, parts))
    mu = 1 + sum(parts)
    return CounterexampleReport(k, l, tau, mu, mu == tau - 1, types)


# --------------------------------------------------------------------------
# singular locus of the transform in the projective fibre


def transform_singular_locus(matrix, budget=DEFAULT_BUDGET) -> Ideal:
    """Homogeneous ideal in the s-variables of the image of Sing(Y) in P^{m-1}.

    Built from I_Tj plus the codimension-size minors of its full Jacobian,
    saturated by the irrelevant ideal, with x eliminated.
    """
    E = _presentation(matrix)
    M = _oriented(E)
    T = tjurina_transform_maximal(EidsPresentation(M, min(M.shape), E.geometric_vars))
    geo = list(E.geometric_vars)
    svars = list(T.transform_vars)
    c = M.n
    J = jacobian(T.ideal.gens, geo + svars)
    I = T.ideal + minors(J, c)
    S = I.ring
    I, _ = saturate(I, Ideal(S, [S.gen(v) for v in svars]), budget)
    return eliminate(I, geo, budget=budget, stage="singular locus")


def transform_is_smooth(matrix, budget=DEFAULT_BUDGET) -> bool:
    """Jacobian criterion for the transform, chart by chart (s_i = 1)."""
    E = _presentation(matrix)
    M = _oriented(E)
    T = tjurina_transform_maximal(EidsPresentation(M, min(M.shape), E.geometric_vars))
    geo = list(E.geometric_vars)
    svars = list(T.transform_vars)
    for pivot in svars:
        rest = geo + [v for v in svars if v != pivot]
        R = PolyRing(rest, degrevlex(rest), E.ring.field)
        gens = [g.subs({pivot: 1}).to_ring(R) for g in T.ideal.gens]
        I = Ideal(R, gens) + minors(jacobian(gens, rest), M.n)
        if not I.basis(budget=budget, stage=f"smoothness, chart {pivot}").is_unit_ideal():
            return False
    return True


def singular_locus_via_linear_part(matrix) -> Ideal:
    """Maximal minors of A, the x-derivative block of the transform Jacobian (linear entries)."""
    E = _presentation(matrix)
    M = _oriented(E)
    T = tjurina_transform_maximal(EidsPresentation(M, min(M.shape), E.geometric_vars))
    geo = list(E.geometric_vars)
    svars = list(T.transform_vars)
    A = jacobian(T.ideal.gens, geo)
    S = PolyRing(svars, degrevlex(svars), E.ring.field)
    A = A.map(lambda e: e.subs({v: 0 for v in geo})).to_ring(S)
    return minors(A, min(A.shape))


def projective_degree(I: Ideal, expected_dim: int | None = None, start: int | None = None):
    """(dimension, degree) of the projective scheme of a homogeneous ideal.

    Read off the Hilbert function of the leading ideal once it agrees with a
    polynomial; only dimensions 0 and ``n-2`` (hypersurfaces) use exact rules,
    other cases fall back to finite differences.
    """
    R = I.ring
    B = I.basis()
    n = R.nvars
    if B.is_unit_ideal():
        return -1, 0
    deg0 = start or max((g.total_degree() for g in B.generators), default=1) + 2
    vals = [graded_slice_dim(B, R.variables, d) for d in range(deg0, deg0 + n + 2)]
    # differences until constant
    diffs = vals
    dim = 0
    while len(set(diffs)) > 1:
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        dim += 1
        if not diffs:
            raise ValueError("Hilbert function not yet polynomial; raise the start degree")
    if diffs[0] == 0:
        return -1, 0
    return dim, diffs[0]
