"""Ideals and the operations built on bases: minors, Jacobians, elimination,
ideal quotients, saturation and intersection.

All operations here use global orders.  An :class:`Ideal` keeps its
generators in the ring it was created in and caches one basis per order.
"""

from __future__ import annotations

import logging

from gmpy2 import mpq

from .algebra.matrix import PolyMatrix
from .algebra.orders import blocks, degrevlex, elimination, wdegrevlex
from .algebra.poly import Poly
from .algebra.ring import PolyRing
from .groebner import DEFAULT_BUDGET, BasisResult, normal_form, std_basis

log = logging.getLogger(__name__)


def _global_ring(R: PolyRing) -> PolyRing:
    if R.order is not None and R.order.is_global:
        return R
    return R.with_order(degrevlex(R.variables))


def fresh_name(taken, stem="T") -> str:
    taken = set(taken)
    name = stem
    i = 0
    while name in taken:
        i += 1
        name = f"{stem}{i}"
    return name


class Ideal:
    """An ideal given by generators in a polynomial ring.

    Equality is mathematical (mutual containment), not generator equality.
    """

    def __init__(self, ring: PolyRing, gens=()):
        self.ring = ring.base_ring
        out = []
        for g in gens:
            g = g if isinstance(g, Poly) else self.ring(g)
            if g.ring != self.ring:
                g = g.to_ring(self.ring)
            if g:
                out.append(g)
        self.gens = tuple(out)
        self._bases: dict = {}

    # -- construction ------------------------------------------------------
    @classmethod
    def from_strings(cls, ring, texts) -> "Ideal":
        return cls(ring, [ring(t) for t in texts])

    @classmethod
    def unit(cls, ring) -> "Ideal":
        return cls(ring, [ring.one()])

    def to_ring(self, ring: PolyRing) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring.base_ring) for g in self.gens])

    # -- bases -------------------------------------------------------------
    def basis(self, order=None, budget=DEFAULT_BUDGET, stage="std") -> BasisResult:
        """Basis under ``order`` (the ring's own order, made global, if omitted)."""
        if order is None:
            R = _global_ring(self.ring)
        else:
            R = self.ring.with_order(order)
        hit = self._bases.get(R.order)
        if hit is None:
            gens = [g.to_ring(R) for g in self.gens]
            hit = std_basis(gens, R, budget=budget, stage=stage)
            self._bases[R.order] = hit
        return hit

    def reduced_generators(self) -> list:
        """Reduced degrevlex basis, mapped back into this ideal's ring."""
        return [g.to_ring(self.ring) for g in self.basis().generators]

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        if not self.gens:
            return False
        if any(g.is_constant() for g in self.gens):
            return True
        return self.basis().is_unit_ideal()

    def contains(self, f) -> bool:
        if not isinstance(f, Poly):
            f = self.ring(f)
        if not f:
            return True
        if not self.gens:
            return False
        if not self.ring.nvars:
            # constants only: any nonzero generator is a unit
            return True
        B = self.basis()
        return normal_form(f.to_ring(B.ring), B).is_zero()

    __contains__ = contains

    def issubset(self, other: "Ideal") -> bool:
        return all(other.contains(g.to_ring(other.ring)) for g in self.gens)

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.issubset(other) and other.issubset(self)

    __hash__ = None

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.gens + tuple(g.to_ring(self.ring) for g in other.gens))

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [a * b.to_ring(self.ring) for a in self.gens for b in other.gens])

    # -- output --------------------------------------------------------------
    def canonical_generators(self) -> list:
        """Reduced basis with primitive integer coefficients, sorted by text."""
        if not self.gens:
            return []
        if self.is_unit():
            return [self.ring.one()]
        gens = [g.primitive_integer() if not self.ring.field.char else g.monic() for g in self.reduced_generators()]
        return sorted(gens, key=str)

    def canonical_strings(self) -> list:
        return [str(g) for g in self.canonical_generators()] or ["0"]

    def variables(self) -> set:
        out = set()
        for g in self.gens:
            out |= g.variables()
        return out

    def __repr__(self):
        return f"Ideal<{', '.join(str(g) for g in self.gens) or '0'}>"


IdealHandle = Ideal


# --------------------------------------------------------------------------
# matrices


def minors(M: PolyMatrix, k: int) -> Ideal:
    """Ideal of all k x k minors; k = 0 gives the unit ideal, k too large the zero ideal."""
    if k < 0:
        raise ValueError("minor size must be nonnegative")
    return Ideal(M.ring, M.minors(k))


def jacobian(gens, variables) -> PolyMatrix:
    """Rows are generators, columns the partial derivatives by ``variables``."""
    gens = list(gens)
    variables = list(variables)
    if not variables:
        raise ValueError("need at least one variable")
    if not gens:
        raise ValueError("need at least one generator")
    R = gens[0].ring
    return PolyMatrix(R, [[g.diff(v) for v in variables] for g in gens])


# --------------------------------------------------------------------------
# elimination and friends


def linear_pivot(f: Poly, variables):
    """A variable v of ``variables`` with f = c*v + h, c a nonzero constant, h free of v."""
    R = f.ring
    best = None
    for v in variables:
        i = R.index[v]
        vk = R.var_key(i)
        if vk not in f.terms:
            continue
        if any(R.exps(k)[i] and k != vk for k in f.terms):
            continue
        best = v
        break
    return best


def substitute_linear(gens, variables):
    """Use generators linear in one of ``variables`` to solve for it and substitute.

    Returns (remaining generators, [(variable, expression), ...]).  The
    remaining generators no longer involve the solved variables, and the
    ideal they generate is the image of the original one under the
    substitution.
    """
    gens = [g for g in gens if g]
    variables = list(variables)
    solved = []
    while True:
        choice = None
        for idx, g in sorted(enumerate(gens), key=lambda ig: len(ig[1].terms)):
            v = linear_pivot(g, [x for x in variables if x not in dict(solved)])
            if v is not None:
                choice = (idx, v)
                break
        if choice is None:
            return gens, solved
        idx, v = choice
        g = gens.pop(idx)
        R = g.ring
        vk = R.var_key(v)
        c = g.terms[vk]
        rest = Poly(R, {k: x for k, x in g.terms.items() if k != vk})
        expr = (-rest).scale(R.field.inv(c))
        solved = [(w, e.subs({v: expr})) for w, e in solved] + [(v, expr)]
        gens = [h.subs({v: expr}) if v in h.variables() else h for h in gens]
        gens = [h for h in gens if h]


def positive_grading(gens, variables=None):
    """Positive integer weights making every generator weighted homogeneous, or None.

    The weights span the kernel of the exponent-difference matrix; a point
    with all weights >= 1 is picked by linear programming and made integral.
    """
    from fractions import Fraction
    from math import gcd, lcm

    import sympy
    from scipy.optimize import linprog

    gens = [g for g in gens if g]
    if not gens:
        return None
    R = gens[0].ring
    variables = list(variables or R.variables)
    rows = []
    for g in gens:
        ex = [R.exps(k) for k in g.terms]
        for e in ex[1:]:
            rows.append([e[i] - ex[0][i] for i in range(R.nvars)])
    n = R.nvars
    if rows:
        basis = sympy.Matrix(rows).nullspace()
    else:
        basis = [sympy.Matrix([1 if j == i else 0 for j in range(n)]) for i in range(n)]
    if not basis:
        return None
    vecs = [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in b] for b in basis]
    if len(vecs) == 1:
        w = vecs[0]
        if all(x < 0 for x in w):
            w = [-x for x in w]
        if not all(x > 0 for x in w):
            return None
    else:
        A = [[float(v[i]) for v in vecs] for i in range(n)]
        res = linprog(
            c=[sum(row[j] for row in A) for j in range(len(vecs))],
            A_ub=[[-x for x in row] for row in A],
            b_ub=[-1.0] * n,
            bounds=[(None, None)] * len(vecs),
        )
        if not res.success:
            return None
        coef = [Fraction(x).limit_denominator(1000) for x in res.x]
        w = [sum(c * v[i] for c, v in zip(coef, vecs)) for i in range(n)]
        if not all(x > 0 for x in w):
            return None
    den = lcm(*(x.denominator for x in w))
    ints = [int(x * den) for x in w]
    g0 = 0
    for x in ints:
        g0 = gcd(g0, x)
    ints = [x // g0 for x in ints]
    weights = dict(zip(R.variables, ints))
    return {v: weights[v] for v in variables}


def eliminate(
    I: Ideal, drop_vars, budget=DEFAULT_BUDGET, stage="eliminate", presubstitute: bool = True, weighted: bool = True, weights=None
) -> Ideal:
    """I intersected with the subring in the remaining variables.

    The result lives in a new ring on the kept variables (in their original
    order, degrevlex).  Variables that some generator determines linearly
    are substituted away first; the rest go through a two-block
    elimination order, weighted when the generators admit a positive
    grading.
    """
    R = I.ring
    drop = [v for v in R.variables if v in set(drop_vars)]
    unknown = set(drop_vars) - set(R.variables)
    if unknown:
        raise ValueError(f"unknown variables {sorted(unknown)}")
    keep = [v for v in R.variables if v not in drop]
    sub = PolyRing(keep, degrevlex(keep) if keep else None, R.field)
    if not drop:
        return Ideal(sub, [g.to_ring(sub) for g in I.gens])
    if not I.gens:
        return Ideal(sub, [])
    if presubstitute:
        gens, solved = substitute_linear(list(I.gens), drop)
        if solved:
            done = {v for v, _ in solved}
            drop = [v for v in drop if v not in done]
            rest = [v for v in R.variables if v not in done]
            R2 = PolyRing(rest, degrevlex(rest), R.field)
            I = Ideal(R2, [g.to_ring(R2) for g in gens])
            R = R2
            if not drop:
                return Ideal(sub, [g.to_ring(sub) for g in I.gens])
            if not I.gens:
                return Ideal(sub, [])
    w = weights if weights is not None else (positive_grading(I.gens) if weighted else None)
    if w is not None:
        order = blocks(("wp", drop, [w[v] for v in drop]), ("wp", keep, [w[v] for v in keep]))
    else:
        order = elimination(drop, keep)
    E = R.with_order(order)
    B = I.basis(E.order, budget=budget, stage=stage)
    idx = [R.index[v] for v in drop]
    out = []
    for g in B.generators:
        if all(not any(E.exps(k)[i] for i in idx) for k in g.terms):
            out.append(g.to_ring(sub))
    J = Ideal(sub, out)
    # the kept part of an elimination basis is a degrevlex basis of the result
    if keep:
        J._bases[sub.order] = std_basis(J.gens, sub, budget=budget, stage=stage) if out else std_basis([], sub)
    return J


def _extend(R: PolyRing, names, front=True) -> PolyRing:
    vs = list(names) + list(R.variables) if front else list(R.variables) + list(names)
    return PolyRing(vs, degrevlex(vs), R.field)


def _to_sympy(f: Poly, gens, domain):
    import sympy

    R = f.ring
    F = R.field
    data = {}
    for k, c in f.terms.items():
        data[R.exps(k)] = int(c) if F.char else sympy.Rational(int(c.numerator), int(c.denominator))
    return sympy.Poly.from_dict(data, *gens, domain=domain)


def _from_sympy(P, R: PolyRing) -> Poly:
    import sympy

    F = R.field
    out = {}
    for exps, c in P.terms():
        if F.char:
            v = F(int(c))
        else:
            c = sympy.Rational(c)
            v = F(mpq(int(c.p), int(c.q)))
        if v:
            out[R.key(exps)] = v
    return Poly(R, out)


def poly_factors(f: Poly):
    """[(irreducible factor, multiplicity)], factors monic; constants dropped."""
    import sympy

    R = f.ring
    gens = sympy.symbols(list(R.variables))
    domain = sympy.GF(R.field.char) if R.field.char else sympy.QQ
    _, facs = _to_sympy(f, gens, domain).factor_list()
    return [(_from_sympy(q, R).monic(), e) for q, e in facs]


def divide_if_exact(f: Poly, g: Poly):
    """f / g when g divides f, else None."""
    try:
        return exact_divide(f, g)
    except ValueError:
        return None


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Greatest common divisor, monic under the ring order.

    The smaller operand is factored and its irreducible factors are divided
    out of the larger one as often as possible.
    """
    R = f.ring
    g = g.to_ring(R)
    if not f:
        return g.monic() if g else g
    if not g:
        return f.monic()
    small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    if R.field.char:
        # no multivariate factoring over F_p here: gcd = f*g / lcm with the
        # lcm from an elimination
        if small.is_constant():
            return R.one()
        meet = _intersect_elim(Ideal(R, [f]), Ideal(R, [g]), DEFAULT_BUDGET)
        return exact_divide(f * g, principal_generator(meet)).monic()
    out = R.one()
    for q, e in poly_factors(small):
        for _ in range(e):
            r = divide_if_exact(big, q)
            if r is None:
                break
            big = r
            out = out * q
    return out.monic()


def _single(I: Ideal):
    """The generator of I when it is visibly principal (one generator), else None."""
    return I.gens[0] if len(I.gens) == 1 else None


def intersect(I: Ideal, J: Ideal, budget=DEFAULT_BUDGET) -> Ideal:
    """I ∩ J via T*I + (1-T)*J with T eliminated; lcm for two principal ideals."""
    if I.ring != J.ring:
        J = J.to_ring(I.ring)
    R = I.ring
    if not I.gens or not J.gens:
        return Ideal(R, [])
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    f, g = _single(I), _single(J)
    if f is not None and g is not None and not R.field.char:
        return Ideal(R, [exact_divide(f * g, poly_gcd(f, g))])
    return _intersect_elim(I, J, budget)


def _intersect_elim(I: Ideal, J: Ideal, budget) -> Ideal:
    R = I.ring
    T = fresh_name(R.variables, "T")
    S = _extend(R, [T])
    t = S.gen(T)
    gens = [t * g.to_ring(S) for g in I.gens] + [(1 - t) * g.to_ring(S) for g in J.gens]
    # T * I + (1 - T) * J is not graded, but when I and J share a grading the
    # weighted block order still keeps the kept block degree-compatible
    w = positive_grading(list(I.gens) + list(J.gens))
    if w is not None:
        w = dict(w, **{T: 1})
    out = eliminate(Ideal(S, gens), [T], budget=budget, stage="intersect", presubstitute=False, weights=w)
    return out.to_ring(R)


def _as_variable(g: Poly):
    """The variable name if g is a single variable, else None."""
    if len(g.terms) != 1:
        return None
    (k, c), = g.terms.items()
    e = g.ring.exps(k)
    if c != 1 or sum(e) != 1:
        return None
    return g.ring.variables[e.index(1)]


def _graded_variable_quotient(I: Ideal, x: str, w: dict, budget) -> Ideal:
    """I : x for I homogeneous under the weights w.

    Under weighted revlex with x last, x divides a homogeneous element iff it
    divides its leading term, so dividing the basis elements once by x gives
    generators of the quotient.
    """
    R = I.ring
    names = [v for v in R.variables if v != x] + [x]
    order = wdegrevlex(names, [w[v] for v in names])
    B = I.basis(order, budget=budget, stage="quotient")
    i = B.ring.index[x]
    out = []
    for g in B.generators:
        if all(B.ring.exps(k)[i] for k in g.terms):
            g = exact_divide(g.to_ring(R), R.gen(x))
        out.append(g.to_ring(R))
    return Ideal(R, out)


def exact_divide(f: Poly, g: Poly) -> Poly:
    """f / g, which must be exact."""
    R = f.ring
    G = _global_ring(R)
    f2, g2 = f.to_ring(G), g.to_ring(G)
    if not g2:
        raise ZeroDivisionError("division by zero polynomial")
    glk = g2.lm()
    ginv = G.field.inv(g2.terms[glk])
    q = {}
    h = f2
    while h:
        k = h.lm()
        if not G.divides(glk, k):
            raise ValueError(f"{g} does not divide {f}")
        c = h.terms[k] * ginv
        if G.field.char:
            c %= G.field.char
        shift = k - glk
        q[shift] = c
        h = h - g2.mul_term(shift, c)
    return Poly(G, q).to_ring(R)


def quotient(I: Ideal, J: Ideal, budget=DEFAULT_BUDGET) -> Ideal:
    """I : J, as the intersection over generators g of J of (I ∩ <g>) / g."""
    if J.ring != I.ring:
        J = J.to_ring(I.ring)
    R = I.ring
    if not J.gens:
        return Ideal.unit(R)
    if J.is_unit():
        return I
    h = _single(I)
    if h is not None:
        # <h> : g = <h / gcd(h, g)>, and the intersection of principal ideals is the lcm
        out = None
        for g in J.gens:
            q = exact_divide(h, poly_gcd(h, g))
            out = q if out is None else exact_divide(out * q, poly_gcd(out, q))
        return Ideal(R, [out])
    w = None
    names = [_as_variable(g) for g in J.gens]
    if all(names):
        w = positive_grading(list(I.gens))
    out = None
    for g, x in zip(J.gens, names):
        if w is not None:
            part = _graded_variable_quotient(I, x, w, budget)
        elif g.is_constant():
            part = I
        else:
            meet = intersect(I, Ideal(R, [g]), budget)
            part = Ideal(R, [exact_divide(h, g) for h in meet.gens])
        out = part if out is None else intersect(out, part, budget)
    return out


def _graded_variable_saturation(I: Ideal, x: str, w: dict, budget):
    """(I : x^infinity, largest power of x divided out) for w-homogeneous I."""
    R = I.ring
    names = [v for v in R.variables if v != x] + [x]
    order = wdegrevlex(names, [w[v] for v in names])
    B = I.basis(order, budget=budget, stage="saturate")
    i = B.ring.index[x]
    out = []
    top = 0
    for g in B.generators:
        a = min(B.ring.exps(k)[i] for k in g.terms)
        g = g.to_ring(R)
        if a:
            g = exact_divide(g, R.gen(x) ** a)
            top = max(top, a)
        out.append(g)
    return Ideal(R, out), top


def saturate(I: Ideal, J: Ideal, budget=DEFAULT_BUDGET, max_iter: int = 1000):
    """(I : J^infinity, number of quotient steps that enlarged the ideal).

    When J is generated by variables and I is positively graded the
    saturation is the intersection of the I : x^infinity, each read off a
    single basis; the step count is then the largest power divided out.
    """
    if J.ring != I.ring:
        J = J.to_ring(I.ring)
    if J.is_unit():
        return I, 0
    names = [_as_variable(g) for g in J.gens]
    w = positive_grading(list(I.gens)) if I.gens and J.gens and all(names) else None
    if w is not None:
        out, steps = None, 0
        for x in names:
            part, a = _graded_variable_saturation(I, x, w, budget)
            steps = max(steps, a)
            out = part if out is None else intersect(out, part, budget)
        if out.issubset(I):
            return I, 0
        return out, steps
    cur = I
    steps = 0
    for _ in range(max_iter):
        nxt = quotient(cur, J, budget)
        if nxt.issubset(cur):
            return cur, steps
        cur = nxt
        steps += 1
    raise RuntimeError("saturation did not stabilise")


def saturate_by_element(I: Ideal, g: Poly, budget=DEFAULT_BUDGET, stage="saturate") -> Ideal:
    """I : g^infinity in one elimination, using I + <1 - U*g>."""
    R = I.ring
    if g.is_constant():
        return I
    U = fresh_name(R.variables, "U")
    S = _extend(R, [U])
    u = S.gen(U)
    gens = [f.to_ring(S) for f in I.gens] + [1 - u * g.to_ring(S)]
    return eliminate(Ideal(S, gens), [U], budget=budget, stage=stage).to_ring(R)


def saturate_fast(I: Ideal, J: Ideal, budget=DEFAULT_BUDGET, stage="saturate") -> Ideal:
    """I : J^infinity as the intersection of I : g^infinity over generators g of J."""
    if J.ring != I.ring:
        J = J.to_ring(I.ring)
    if J.is_unit():
        return I
    out = None
    for g in J.gens:
        part = saturate_by_element(I, g, budget, stage)
        out = part if out is None else intersect(out, part, budget)
    return out


def hypersurface_degree(I: Ideal) -> int:
    """Total degree of the generator of a principal proper nonzero ideal."""
    if not I.gens:
        raise ValueError("zero ideal is not a hypersurface")
    gens = I.reduced_generators()
    if len(gens) != 1:
        raise ValueError(f"ideal is not principal ({len(gens)} basis elements)")
    d = gens[0].total_degree()
    if d <= 0:
        raise ValueError("unit ideal is not a hypersurface")
    return d


def principal_generator(I: Ideal) -> Poly:
    gens = I.reduced_generators()
    if len(gens) != 1:
        raise ValueError("ideal is not principal")
    return gens[0]
