"""The G-tangent module of a matrix germ, its colength and the versal unfolding."""

from __future__ import annotations

from ..algebra.matrix import PolyMatrix
from ..algebra.orders import negdegrevlex
from ..algebra.poly import Vector
from ..algebra.ring import PolyRing
from ..groebner import DEFAULT_BUDGET, INFINITE, local_basis, quotient_dim
from ..groebner.staircase import standard_monomials
from .presentation import EidsPresentation, PreconditionError, VersalFamily, _names


def _local_matrix(E: EidsPresentation):
    """The matrix over the geometric variables alone (parameters set to 0)."""
    R = PolyRing(E.geometric_vars, negdegrevlex(E.geometric_vars), E.ring.field)
    M = E.matrix
    if E.params:
        M = M.subs({p: 0 for p in E.params})
    return R, [[e.to_ring(R) for e in row] for row in M.rows]


def tangent_generators(E: EidsPresentation):
    """Generators of J_F + J_op in Mat(m, n) = O^(mn), component i*n + j."""
    R, F = _local_matrix(E)
    m, n = E.shape
    V = R.with_rank(m * n)

    def flat(rows):
        return Vector.from_components(V, [rows[i][j] for i in range(m) for j in range(n)])

    zero = R.zero()
    gens = []
    for v in E.geometric_vars:
        gens.append(flat([[e.diff(v) for e in row] for row in F]))
    # E_ij * F puts row j of F into row i
    for i in range(m):
        for j in range(m):
            gens.append(flat([[F[j][c] if r == i else zero for c in range(n)] for r in range(m)]))
    # F * E_ij puts column i of F into column j
    for i in range(n):
        for j in range(n):
            gens.append(flat([[F[r][i] if c == j else zero for c in range(n)] for r in range(m)]))
    return V, [g for g in gens if g]


def tangent_basis(E: EidsPresentation, budget=DEFAULT_BUDGET):
    """Truncated local basis of J_F + J_op, or None when the quotient is infinite.

    Plain Mora can stall on these modules before a highest corner shows up;
    truncating at a degree D with m^D in the module avoids that.
    """
    V, gens = tangent_generators(E)
    hit = local_basis(gens, V, budget=budget, stage="tau_g")
    return None if hit is None else hit[0]


def tau_g(E: EidsPresentation, budget=DEFAULT_BUDGET):
    """dim Mat(m,n;O)/(J_F + J_op) over the local ring at the origin, or INFINITE."""
    B = tangent_basis(E, budget)
    return INFINITE if B is None else quotient_dim(B)


def versal_unfolding(E: EidsPresentation, budget=DEFAULT_BUDGET, stem: str = "t") -> VersalFamily:
    """F + sum t_i m_i over the standard monomials of the tangent module."""
    B = tangent_basis(E, budget)
    if B is None:
        raise PreconditionError("tau_G is infinite: the presentation is not finitely determined")
    V = B.ring
    R = V.base_ring
    m, n = E.shape
    monos = standard_monomials(B)
    monos.sort(key=lambda ec: (sum(ec[0]), R.key(ec[0]), ec[1]))
    params = _names(stem, len(monos), E.ring.variables)
    S = PolyRing(list(E.ring.variables) + params, field=E.ring.field)
    rows = [[e.to_ring(S) for e in row] for row in E.matrix.rows]
    names = R.variables
    for p, (exps, comp) in zip(params, monos):
        i, j = divmod(comp, n)
        term = S.gen(p)
        for name, e in zip(names, exps):
            if e:
                term = term * S.gen(name) ** e
        rows[i][j] = rows[i][j] + term
    return VersalFamily(PolyMatrix(S, rows), E.minor_size, tuple(E.geometric_vars), tuple(params), tuple(monos), "auto")
