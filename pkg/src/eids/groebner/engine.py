"""Gröbner bases (Buchberger) and standard bases (Mora).

The entry point is :func:`std_basis`.  Under a global order it runs
Buchberger's algorithm with the sugar selection strategy and the
Gebauer–Möller criteria and returns the reduced basis.  Under a local or
mixed order it runs the standard basis algorithm on top of Mora's ecart
normal form and returns a minimal basis with interreduced leading terms.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field

from ..algebra.poly import Poly, Vector
from ..algebra.orders import LEX
from ..algebra.ring import PolyRing
from .kernel import Budget, Elem, make_monic, max_degree, mora_nf, reduce_full, spoly

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class BasisResult:
    """A computed basis together with the order it was computed under."""

    ring: PolyRing
    generators: tuple
    reduced: bool
    leading_terms: tuple = field(repr=False)
    steps: int = field(default=0, compare=False)

    @property
    def ordering(self):
        return self.ring.order

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def leading_exponents(self):
        """(exponent tuple, component) for each generator."""
        R = self.ring
        return [(R.exps(k), R.comp(k) if R.rank else 0) for k in self.leading_terms]

    def is_unit_ideal(self) -> bool:
        R = self.ring
        if R.rank:
            comps = {R.comp(k) for k in self.leading_terms if R.ring_part(k) == 0}
            return len(comps) == R.rank
        return any(k == 0 for k in self.leading_terms)

    def elems(self):
        p = self.ring.field.char
        out = []
        for i, g in enumerate(self.generators):
            e = _elem(g.terms, self.ring, p, i)
            out.append(e)
        return out


def _elem(f: dict, R, p, index=0, sugar=None):
    f = make_monic(f, p)
    lk = max(f)
    dmax = max_degree(f, R)
    if sugar is None:
        sugar = _sugar_degree(R, f)
    e = Elem(lk, f, sugar=sugar, ecart=dmax - R.deg(lk), comp=R.comp(lk) if R.rank else 0, index=index)
    return e


def _degree_function(R):
    """Degree used by the sugar strategy: weighted if the order is, else total."""
    fn = R.__dict__.get("_sugar_deg")
    if fn is None:
        g = R.order.grading() if R.order is not None else None
        if g is None:
            fn = R.deg
        else:
            w = [g[v] for v in R.variables]
            exps = R.exps
            fn = lambda k: sum(a * b for a, b in zip(w, exps(k)))  # noqa: E731
        R.__dict__["_sugar_deg"] = fn
    return fn


def _sugar_degree(R, f) -> int:
    d = _degree_function(R)
    return max(d(k) for k in f)


def _wrap(R, d):
    return (Vector if R.rank else Poly)(R, d)


def std_basis(gens, ring: PolyRing | None = None, *, budget=DEFAULT_BUDGET, stage: str = "std", truncate: int | None = None) -> BasisResult:
    """Standard basis of the ideal/submodule generated by ``gens``.

    ``gens`` are Polys or Vectors of one ring; the ring's order decides
    between Buchberger (global) and Mora (local or mixed).  ``budget`` caps
    the number of reduction steps; exceeding it raises ResourceExhausted.
    ``truncate=D`` (single negdegrevlex block only) computes modulo all
    monomials of degree > D, i.e. a standard basis of gens + m^(D+1).
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators must share one ring")
    bud = budget if isinstance(budget, Budget) else Budget(budget, stage)
    polys = [dict(g.terms) for g in gens if g.terms]
    if ring.order is None or ring.order.is_global:
        elems = _buchberger(polys, ring, bud)
        elems = _reduce_basis(elems, ring, bud)
        reduced = True
    else:
        if truncate is not None and not _degree_cutoff_ok(ring):
            raise ValueError("truncation needs a single negdegrevlex block with TOP")
        elems = _mora_std(polys, ring, bud, truncate)
        reduced = False
    elems.sort(key=lambda e: e.lk)
    gens_out = tuple(_wrap(ring, e.poly) for e in elems)
    return BasisResult(ring, gens_out, reduced, tuple(e.lk for e in elems), bud.used)


# --------------------------------------------------------------------------
# Buchberger


class _Pairs:
    """Pair queue ordered by (sugar, lcm key, insertion)."""

    def __init__(self):
        self.heap = []
        self.count = 0
        self.alive = {}

    def push(self, sugar, lcm, i, j):
        self.count += 1
        item = [sugar, lcm, self.count, i, j, True]
        self.alive[(i, j)] = item
        heapq.heappush(self.heap, item)

    def pop(self):
        while self.heap:
            item = heapq.heappop(self.heap)
            if item[5]:
                del self.alive[(item[3], item[4])]
                return item
        return None

    def items(self):
        return [it for it in self.alive.values()]

    def kill(self, item):
        item[5] = False
        self.alive.pop((item[3], item[4]), None)


def _update(R, basis, active, pairs: _Pairs, new: int, use_product: bool, lcms):
    """Gebauer–Möller update for adding basis[new]."""
    h = basis[new]
    hk = h.lk
    divides = R.divides
    # lex blocks: take the pair with the smallest lcm (normal strategy).
    # Sugar there walks through long chains of intermediate elements whose
    # coefficients over Q double at each step.
    normal = R.order is not None and any(b.kind == LEX for b in R.order.blocks)
    # pairs (h, g) for active g with same component
    cand = []
    for i in active:
        g = basis[i]
        if R.rank and g.comp != h.comp:
            continue
        lcm = R.lcm_keys(hk, g.lk)
        copr = R.coprime(hk, g.lk) and use_product
        cand.append((lcm, i, copr))
    # chain criterion among new pairs
    kept = []
    for idx, (lcm, i, copr) in enumerate(cand):
        if copr:
            kept.append((lcm, i, copr))
            continue
        redundant = False
        for jdx, (lcm2, _j, _c) in enumerate(cand):
            if jdx == idx:
                continue
            # strictly smaller lcm, or an equal one seen earlier
            if divides(lcm2, lcm) and (lcm2 != lcm or jdx < idx):
                redundant = True
                break
        if not redundant:
            kept.append((lcm, i, copr))
    # drop old pairs (g1, g2) with LM(h) | lcm(g1,g2) strictly
    for item in pairs.items():
        i, j = item[3], item[4]
        lcm = lcms[(i, j)]
        if divides(hk, lcm):
            if R.rank and basis[i].comp != h.comp:
                continue
            if R.lcm_keys(basis[i].lk, hk) != lcm and R.lcm_keys(basis[j].lk, hk) != lcm:
                pairs.kill(item)
    for lcm, i, copr in kept:
        if copr:
            continue
        g = basis[i]
        deg = _degree_function(R)
        dl = deg(lcm)
        sugar = max(g.sugar + dl - deg(g.lk), h.sugar + dl - deg(hk))
        if normal:
            sugar = 0
        lcms[(i, new)] = lcm
        pairs.push(sugar, lcm, i, new)
    # remove active elements whose lead is divisible by h's lead
    return [i for i in active if not divides(hk, basis[i].lk)] + [new]


def _buchberger(polys, R, budget: Budget):
    p = R.field.char
    use_product = not R.rank
    basis: list[Elem] = []
    active: list[int] = []
    pairs = _Pairs()
    lcms: dict = {}
    # interreduce the input a little: insert by increasing lead
    start = []
    for f in polys:
        if f:
            start.append(_elem(f, R, p))
    start.sort(key=lambda e: (e.sugar, e.lk))
    for e in start:
        act = [basis[i] for i in active]
        r = reduce_full(e.poly, act, R, p, budget)
        if not r:
            continue
        e2 = _elem(r, R, p, len(basis), sugar=e.sugar)
        basis.append(e2)
        active = _update(R, basis, active, pairs, len(basis) - 1, use_product, lcms)
    while True:
        item = pairs.pop()
        if item is None:
            break
        sugar, lcm, _, i, j, _ = item
        s = spoly(basis[i], basis[j], R, p)
        act = [basis[k] for k in active]
        r = reduce_full(s, act, R, p, budget)
        if not r:
            continue
        e = _elem(r, R, p, len(basis), sugar=sugar)
        basis.append(e)
        if e.lk == 0 and not R.rank:
            # unit ideal
            return [_elem({0: R.field.one}, R, p)]
        active = _update(R, basis, active, pairs, len(basis) - 1, use_product, lcms)
        log.debug("basis size %d, pairs %d, sugar %d", len(active), len(pairs.alive), sugar)
    return [basis[i] for i in active]


def _reduce_basis(elems, R, budget):
    """Minimalise and tail-reduce a Gröbner basis; all elements monic."""
    p = R.field.char
    elems = sorted(elems, key=lambda e: e.lk)
    minimal = []
    for e in elems:
        if any(R.divides(o.lk, e.lk) for o in minimal):
            continue
        minimal.append(e)
    out = []
    for idx, e in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = {k: c for k, c in e.poly.items() if k != e.lk}
        r = reduce_full(tail, others, R, p, budget)
        r[e.lk] = e.poly[e.lk]
        out.append(_elem(r, R, p, idx))
    return out


# --------------------------------------------------------------------------
# Mora


def _degree_cutoff_ok(R) -> bool:
    o = R.order
    return len(o.blocks) == 1 and o.blocks[0].kind == "negdegrevlex" and o.module_rule == "TOP"


def _highest_corner_degree(R, elems):
    """Smallest D with every degree-D monomial (in every component) a leading term multiple."""
    from .staircase import monomials_of_degree

    n = R.nvars
    comps = range(R.rank) if R.rank else [None]
    # pure powers give an upper bound on D
    bound = 0
    for c in comps:
        leads = [R.exps(e.lk) for e in elems if not R.rank or e.comp == c]
        for i in range(n):
            powers = [le[i] for le in leads if sum(le) == le[i]]
            if not powers:
                return None
            bound += min(powers) - 1
    for D in range(1, bound + 2):
        ok = True
        for c in comps:
            leads = [R.exps(e.lk) for e in elems if not R.rank or e.comp == c]
            for mono in monomials_of_degree(n, D):
                if not any(all(a <= b for a, b in zip(le, mono)) for le in leads):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return D
    return None


def _mora_std(polys, R, budget: Budget, truncate=None):
    p = R.field.char
    basis: list[Elem] = []
    pairs = _Pairs()
    lcms: dict = {}
    active: list[int] = []
    cutoff_ok = _degree_cutoff_ok(R)
    cutoff = truncate
    if truncate is not None:
        sh = R._deg_shift
        polys = [{k: c for k, c in f.items() if (k >> sh) & 0xFFF <= truncate} for f in polys]
    start = [_elem(f, R, p) for f in polys if f]
    start.sort(key=lambda e: (R.deg(e.lk), e.ecart, e.lk))

    def add(r, sugar):
        nonlocal active, cutoff
        e = _elem(r, R, p, len(basis), sugar=sugar)
        basis.append(e)
        active = _update(R, basis, active, pairs, len(basis) - 1, False, lcms)
        if cutoff_ok:
            D = _highest_corner_degree(R, [basis[i] for i in active])
            if D is not None and (cutoff is None or D - 1 < cutoff):
                cutoff = D - 1
        return e

    for e in start:
        r = mora_nf(e.poly, [basis[i] for i in active], R, p, budget, cutoff)
        if r:
            add(r, _sugar_degree(R, r))
            if not R.rank and basis[-1].lk == 0:
                return [basis[-1]]
    while True:
        item = pairs.pop()
        if item is None:
            break
        sugar, lcm, _, i, j, _ = item
        s = spoly(basis[i], basis[j], R, p)
        r = mora_nf(s, [basis[k] for k in active], R, p, budget, cutoff)
        if not r:
            continue
        e = add(r, sugar)
        if not R.rank and e.lk == 0:
            return [e]
    out = [basis[i] for i in active]
    return _minimal(out, R)


def _minimal(elems, R):
    elems = sorted(elems, key=lambda e: e.lk)
    out = []
    for e in elems:
        if any(R.divides(o.lk, e.lk) for o in out):
            continue
        out.append(e)
    return out


def local_basis(gens, ring: PolyRing, *, budget=DEFAULT_BUDGET, stage: str = "colength", start: int = 6, max_degree: int = 64):
    """Truncated local basis whose staircase is the whole quotient, or None if infinite.

    If Q is the quotient, a basis of gens + m^(D+1) gives the Hilbert-Samuel
    counts of Q up to degree D, and once the degree-D slice of gr(Q)
    vanishes m^D Q = 0, so the standard monomials below D are exact.  D
    doubles until then.
    """
    from .staircase import standard_counts_by_degree

    bud = budget if isinstance(budget, Budget) else Budget(budget, stage)
    D = start
    while True:
        B = std_basis(gens, ring, budget=bud, stage=stage, truncate=D)
        counts = standard_counts_by_degree(B, D)
        if counts[D] == 0:
            return B, sum(counts[:D])
        if D >= max_degree:
            return None
        D = min(2 * D, max_degree)


def local_colength(gens, ring: PolyRing, *, budget=DEFAULT_BUDGET, stage: str = "colength", start: int = 6, max_degree: int = 64):
    """Colength of the submodule generated by ``gens`` at the origin (negdegrevlex), or INFINITE."""
    from .staircase import INFINITE

    hit = local_basis(gens, ring, budget=budget, stage=stage, start=start, max_degree=max_degree)
    return INFINITE if hit is None else hit[1]


# --------------------------------------------------------------------------
# normal forms


def normal_form(f, basis: BasisResult, budget=None):
    """Normal form of f with respect to a computed basis.

    Global orders give the unique fully reduced remainder.  Local and mixed
    orders give Mora's weak normal form, defined up to a unit factor.
    """
    R = basis.ring
    if f.ring != R:
        f = f.to_ring(R)
    p = R.field.char
    bud = budget if isinstance(budget, Budget) else (Budget(budget) if budget else None)
    elems = basis.elems()
    if R.order is None or R.order.is_global:
        r = reduce_full(f.terms, elems, R, p, bud)
    else:
        r = mora_nf(f.terms, elems, R, p, bud)
    return _wrap(R, r)


def reduces_to_zero(f, basis: BasisResult) -> bool:
    return normal_form(f, basis).is_zero()


def s_polynomial(f, g):
    """S-polynomial of two elements of one ring (monic normalised)."""
    R = f.ring
    p = R.field.char
    a = _elem(f.terms, R, p)
    b = _elem(g.terms, R, p)
    if R.rank and a.comp != b.comp:
        return _wrap(R, {})
    return _wrap(R, spoly(a, b, R, p))
