"""Counting standard monomials of a leading ideal or module."""

from __future__ import annotations

from itertools import product


class _Infinite:
    """Marker for an infinite-dimensional quotient."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INFINITE"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def monomials_of_degree(n: int, d: int):
    """All exponent tuples of length n and total degree d."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def _minimalize(leads):
    leads = sorted(set(leads), key=sum)
    out = []
    for a in leads:
        if not any(all(x <= y for x, y in zip(b, a)) for b in out):
            out.append(a)
    return out


def count_standard(leads, n: int):
    """Number of exponent vectors in N^n outside the monoid ideal generated by ``leads``."""
    leads = _minimalize(tuple(a) for a in leads)
    return _count(leads, n)


def _count(leads, k):
    if k == 0:
        return 0 if leads else 1
    if not leads:
        return INFINITE
    pure = [a[k - 1] for a in leads if not any(a[: k - 1])]
    if not pure:
        return INFINITE
    b = min(pure)
    total = 0
    for j in range(b):
        sub = _minimalize(a[: k - 1] for a in leads if a[k - 1] <= j)
        c = _count(sub, k - 1)
        if c is INFINITE:
            return INFINITE
        total += c
    return total


def _leads_by_component(basis):
    R = basis.ring
    comps = range(R.rank) if R.rank else [0]
    by = {c: [] for c in comps}
    for k in basis.leading_terms:
        c = R.comp(k) if R.rank else 0
        by[c].append(R.exps(k))
    return by


def quotient_dim(basis):
    """Dimension of the quotient by the leading ideal/module, or INFINITE."""
    R = basis.ring
    total = 0
    for c, leads in _leads_by_component(basis).items():
        v = count_standard(leads, R.nvars)
        if v is INFINITE:
            return INFINITE
        total += v
    return total


def standard_monomials(basis, limit: int = 10**6):
    """The standard monomials as (exponents, component) pairs, for finite quotients."""
    R = basis.ring
    n = R.nvars
    out = []
    for c, leads in _leads_by_component(basis).items():
        leads = _minimalize(leads)
        bounds = []
        for i in range(n):
            pure = [a[i] for a in leads if sum(a) == a[i]]
            if not pure:
                raise ValueError("quotient is infinite dimensional")
            bounds.append(min(pure))
        for e in product(*(range(b) for b in bounds)):
            if not any(all(x <= y for x, y in zip(a, e)) for a in leads):
                out.append((e, c))
                if len(out) > limit:
                    raise ValueError("too many standard monomials")
    return out


def graded_slice_dim(basis, grading_vars, degree: int, check: bool = True):
    """Dimension of the degree-``degree`` part of the quotient, graded by ``grading_vars``.

    Generators must be homogeneous in ``grading_vars``.  For each monomial
    of that degree in the grading variables the remaining variables give a
    finite (or INFINITE) staircase, and the counts are summed.
    """
    R = basis.ring
    gidx = [R.index[v] for v in grading_vars]
    rest = [i for i in range(R.nvars) if i not in gidx]
    if check:
        for g in basis.generators:
            degs = {sum(R.exps(k)[i] for i in gidx) for k in g.terms}
            if len(degs) > 1:
                raise ValueError(f"generator not homogeneous in {list(grading_vars)}: {g}")
    if degree < 0:
        return 0
    total = 0
    for c, leads in _leads_by_component(basis).items():
        for mono in monomials_of_degree(len(gidx), degree):
            sub = [tuple(a[i] for i in rest) for a in leads if all(a[gi] <= m for gi, m in zip(gidx, mono))]
            v = count_standard(sub, len(rest))
            if v is INFINITE:
                return INFINITE
            total += v
    return total


def standard_counts_by_degree(basis, top: int) -> list:
    """Number of standard monomials in each degree 0..top (all components)."""
    R = basis.ring
    n = R.nvars
    out = [0] * (top + 1)
    for c, leads in _leads_by_component(basis).items():
        leads = _minimalize(leads)
        for d in range(top + 1):
            for mono in monomials_of_degree(n, d):
                if not any(all(x <= y for x, y in zip(a, mono)) for a in leads):
                    out[d] += 1
    return out


def krull_dimension(basis) -> int:
    """Dimension of the quotient ring: largest variable set carrying no leading monomial.

    Only meaningful for ideals under a global order; -1 for the unit ideal.
    """
    R = basis.ring
    leads = _minimalize(R.exps(k) for k in basis.leading_terms)
    if any(sum(a) == 0 for a in leads):
        return -1
    supports = [frozenset(i for i, e in enumerate(a) if e) for a in leads]
    n = R.nvars
    best = 0

    def grow(start, chosen):
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + (n - start) <= best:
            return
        for i in range(start, n):
            cand = chosen | {i}
            if not any(s <= cand for s in supports):
                grow(i + 1, cand)

    grow(0, frozenset())
    return best
