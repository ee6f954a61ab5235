"""Equations of the Tjurina transform, Plücker relations and the nu* test."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..algebra.matrix import PolyMatrix
from ..algebra.orders import degrevlex, negdegrevlex
from ..algebra.poly import Poly
from ..algebra.ring import PolyRing
from ..groebner import std_basis
from ..ideals import Ideal
from .presentation import EidsPresentation, PreconditionError, VersalFamily


@dataclass
class TjurinaTransformIdeal:
    """Transform equations in the ring (geometric vars, transform vars, parameters)."""

    ideal: Ideal
    transform_vars: tuple
    geometric_vars: tuple
    parameters: tuple
    relations: Ideal | None = None
    charts: list = field(default_factory=list)

    @property
    def ring(self):
        return self.ideal.ring

    def full_ideal(self) -> Ideal:
        if self.relations is None or not self.relations.gens:
            return self.ideal
        return self.ideal + self.relations.to_ring(self.ring)

    def chart(self, pivot: str) -> Ideal:
        """The equations with ``pivot`` set to 1, in the ring without it."""
        R = self.ring
        keep = [v for v in R.variables if v != pivot]
        S = PolyRing(keep, degrevlex(keep), R.field)
        I = self.full_ideal()
        return Ideal(S, [g.subs({pivot: 1}).to_ring(S) for g in I.gens])


def _unpack(E):
    if isinstance(E, EidsPresentation):
        return E.matrix, E.geometric_vars, E.params, E.minor_size
    if isinstance(E, VersalFamily):
        return E.matrix, E.geometric_vars, E.parameters, E.minor_size
    if isinstance(E, PolyMatrix):
        return E, tuple(E.ring.variables), (), min(E.shape)
    raise TypeError("expected a presentation, family or matrix")


def transform_names(count, taken, stem="s"):
    taken = set(taken)
    out = []
    for i in range(1, count + 1):
        name = f"{stem}{i}"
        while name in taken:
            name += "_"
        out.append(name)
    return out


def tjurina_transform_maximal(E, names=None) -> TjurinaTransformIdeal:
    """The n generators of (s_1..s_m) . N for an m x n matrix, m <= n (transposing otherwise)."""
    N, geo, params, t = _unpack(E)
    m, n = N.shape
    if t != min(m, n):
        raise PreconditionError("the maximal-minor transform needs t = min(m, n)")
    if n < m:
        N = N.transpose()
        m, n = n, m
    R = N.ring
    s_names = tuple(names) if names else tuple(transform_names(m, R.variables))
    vars_ = list(geo) + list(s_names) + [v for v in R.variables if v not in geo]
    S = PolyRing(vars_, degrevlex(vars_), R.field)
    s = [S.gen(v) for v in s_names]
    NS = N.to_ring(S)
    gens = NS.row_times(s)
    charts = [(v, {v: 1}) for v in s_names]
    return TjurinaTransformIdeal(Ideal(S, gens), s_names, tuple(geo), tuple(v for v in R.variables if v not in geo), None, charts)


def _sorted_sign(idx):
    """(sign, sorted tuple) of an index sequence; sign 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


def plucker_name(idx, stem="p"):
    return stem + "_" + "_".join(str(i) for i in idx)


def plucker_ring(r, n, stem="p", field=None):
    from ..algebra.fields import QQ

    names = [plucker_name(c, stem) for c in combinations(range(1, n + 1), r)]
    return PolyRing(names, degrevlex(names), field or QQ)


def plucker_relations(r: int, n: int, stem: str = "p", ring: PolyRing | None = None) -> Ideal:
    """Quadratic relations of Grass(r, n) in the coordinates p_{i1..ir}.

    Every relation sum_j (-1)^j p_{I,k_j} p_{K - k_j} with |I| = r-1 and
    |K| = r+1, using antisymmetry and vanishing on repeated indices;
    duplicates up to a scalar are dropped.
    """
    if not 1 <= r <= n:
        raise PreconditionError("need 1 <= r <= n")
    R = ring or plucker_ring(r, n, stem)

    def coord(idx):
        sign, srt = _sorted_sign(idx)
        if not sign:
            return None, 0
        return R.gen(plucker_name(srt, stem)), sign

    seen = set()
    out = []
    for I in combinations(range(1, n + 1), r - 1):
        for K in combinations(range(1, n + 1), r + 1):
            f = R.zero()
            for j, kj in enumerate(K):
                a, sa = coord(I + (kj,))
                b, sb = coord(K[:j] + K[j + 1:])
                if a is None or b is None:
                    continue
                term = a * b
                f = f + term.scale((-1) ** j * sa * sb)
            if f:
                f = f.monic()
                key = frozenset(f.terms.items())
                if key not in seen:
                    seen.add(key)
                    out.append(f)
    return Ideal(R, out)


def tjurina_transform_general(E, stem: str = "y") -> TjurinaTransformIdeal:
    """Linear equations sum_l (-1)^l y_{I - i_l} m_{i_l, j} plus the Plücker relations.

    Applies to 1 < t <= m <= n; the y's are indexed by (t-1)-subsets of rows.
    """
    N, geo, params, t = _unpack(E)
    m, n = N.shape
    if n < m:
        N = N.transpose()
        m, n = n, m
    if not 1 < t <= m:
        raise PreconditionError("the Plücker transform needs 1 < t <= m <= n")
    R = N.ring
    subsets = list(combinations(range(1, m + 1), t - 1))
    y_names = []
    taken = set(R.variables)
    for c in subsets:
        name = plucker_name(c, stem)
        while name in taken:
            name += "_"
        y_names.append(name)
    yname = dict(zip(subsets, y_names))
    vars_ = list(geo) + y_names + [v for v in R.variables if v not in geo]
    S = PolyRing(vars_, degrevlex(vars_), R.field)
    NS = N.to_ring(S)
    gens = []
    for I in combinations(range(1, m + 1), t):
        for j in range(n):
            f = S.zero()
            for l, il in enumerate(I, start=1):
                rest = I[: l - 1] + I[l:]
                e = NS[il - 1, j]
                if e:
                    f = f + (S.gen(yname[rest]) * e).scale((-1) ** l)
            if f:
                gens.append(f)
    Y = PolyRing(y_names, degrevlex(y_names), R.field)
    rel_std = plucker_relations(t - 1, m, stem) if 1 < t - 1 < m - 1 else None
    relations = None
    if rel_std is not None:
        rename = dict(zip((plucker_name(c, stem) for c in subsets), y_names))
        relations = Ideal(Y, [_rename(g, rename, Y) for g in rel_std.gens])
    charts = [(v, {v: 1}) for v in y_names]
    return TjurinaTransformIdeal(Ideal(S, gens), tuple(y_names), tuple(geo), tuple(v for v in R.variables if v not in geo), relations, charts)


def _rename(f: Poly, mapping, target: PolyRing) -> Poly:
    src = f.ring
    out = {}
    for k, c in f.terms.items():
        e = src.exps(k)
        exps = [0] * target.nvars
        for name, x in zip(src.variables, e):
            if x:
                exps[target.index[mapping.get(name, name)]] = x
        out[target.key(exps)] = c
    return Poly(target, out)


def nu_star(I: Ideal, local_vars=None):
    """Sorted orders of a minimal standard basis under a local degree order."""
    R = I.ring
    local_vars = tuple(local_vars or R.variables)
    if set(local_vars) != set(R.variables):
        raise PreconditionError("nu* is defined for ideals in the local variables only")
    if not I.gens:
        raise PreconditionError("nu* of the zero ideal")
    L = R.with_order(negdegrevlex(R.variables))
    B = std_basis([g.to_ring(L) for g in I.gens], L, stage="nu_star")
    return tuple(sorted(g.order_in(local_vars) for g in B.generators))


def is_singular(nu, codim: int) -> bool:
    """Singular iff nu* exceeds (1, ..., 1) (codim ones) lexicographically."""
    return tuple(nu) > (1,) * codim
