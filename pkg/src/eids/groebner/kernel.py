"""Reduction kernels on raw ``{key: coeff}`` dicts.

Basis elements are ``Elem`` records holding a monic polynomial, its leading
key and its tail as a list.  Kernels are written once per coefficient field
flavour (``p == 0`` means Q with gmpy2 rationals) to keep the inner loops
free of dispatch.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush

from ..algebra.ring import EXP_BITS

# the 0xFFF literals below are the ring's exponent field mask
assert EXP_BITS == 12


class ResourceExhausted(RuntimeError):
    """Raised when a computation exceeds its reduction-step budget."""

    def __init__(self, msg, stage=None):
        super().__init__(msg)
        self.stage = stage


class Budget:
    """Shared reduction-step counter."""

    __slots__ = ("limit", "used", "stage")

    def __init__(self, limit: int | None = 10**7, stage: str = "std"):
        self.limit = limit
        self.used = 0
        self.stage = stage

    def spend(self, n: int = 1):
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise ResourceExhausted(
                f"step budget of {self.limit} reductions exhausted in stage {self.stage!r}", self.stage
            )


class Elem:
    __slots__ = ("lk", "poly", "tail", "sugar", "ecart", "comp", "index")

    def __init__(self, lk, poly, sugar=0, ecart=0, comp=0, index=0):
        self.lk = lk
        self.poly = poly
        self.tail = [(k, c) for k, c in poly.items() if k != lk]
        self.sugar = sugar
        self.ecart = ecart
        self.comp = comp
        self.index = index


def make_monic(f: dict, p: int) -> dict:
    lk = max(f)
    c = f[lk]
    if c == 1:
        return f
    if p:
        inv = pow(c, -1, p)
        return {k: v * inv % p for k, v in f.items()}
    inv = 1 / c
    return {k: v * inv for k, v in f.items()}


def max_degree(f: dict, R) -> int:
    s = R._deg_shift
    return max((k >> s) & 0xFFF for k in f)


def find_divisor(k, elems, R):
    """First element whose leading key divides k."""
    m = R.EXPMASK
    g = R.GUARD
    bk = (k & m) | g
    if R.rank:
        ck = k & 0xFFF
        for e in elems:
            lk = e.lk
            if (lk & 0xFFF) == ck and (bk - (lk & m)) & g == g:
                return e
        return None
    for e in elems:
        if (bk - (e.lk & m)) & g == g:
            return e
    return None


def reduce_full(f: dict, elems, R, p: int, budget: Budget | None = None) -> dict:
    """Full reduction of f by monic elements (global orders only)."""
    if not f:
        return {}
    h = dict(f)
    heap = [-k for k in h]
    heapify(heap)
    rem = {}
    m = R.EXPMASK
    g = R.GUARD
    rank = R.rank
    leads = [(e.lk & m, e.lk & 0xFFF, e) for e in elems]
    steps = 0
    while heap:
        k = -heappop(heap)
        c = h.pop(k, None)
        if c is None:
            continue
        bk = (k & m) | g
        div = None
        if rank:
            ck = k & 0xFFF
            for le, lc, e in leads:
                if lc == ck and (bk - le) & g == g:
                    div = e
                    break
        else:
            for le, _, e in leads:
                if (bk - le) & g == g:
                    div = e
                    break
        if div is None:
            rem[k] = c
            continue
        steps += 1
        shift = k - div.lk
        get = h.get
        if p:
            for kk, cc in div.tail:
                k2 = kk + shift
                v = get(k2)
                if v is None:
                    h[k2] = (-c * cc) % p
                    heappush(heap, -k2)
                else:
                    v = (v - c * cc) % p
                    if v:
                        h[k2] = v
                    else:
                        del h[k2]
        else:
            for kk, cc in div.tail:
                k2 = kk + shift
                v = get(k2)
                if v is None:
                    h[k2] = -c * cc
                    heappush(heap, -k2)
                else:
                    v = v - c * cc
                    if v:
                        h[k2] = v
                    else:
                        del h[k2]
    if budget is not None:
        budget.spend(steps)
    return rem


def reduce_top(f: dict, elems, R, p: int, budget: Budget | None = None) -> dict:
    """Reduce until the leading term is irreducible (global orders)."""
    h = dict(f)
    steps = 0
    while h:
        k = max(h)
        e = find_divisor(k, elems, R)
        if e is None:
            break
        steps += 1
        c = h.pop(k)
        shift = k - e.lk
        _sub_scaled(h, c, shift, e.tail, p)
    if budget is not None:
        budget.spend(steps)
    return h


def _sub_scaled(h, c, shift, tail, p):
    """h -= c * x^shift * tail (in place)."""
    get = h.get
    if p:
        for kk, cc in tail:
            k2 = kk + shift
            v = get(k2)
            if v is None:
                h[k2] = (-c * cc) % p
            else:
                v = (v - c * cc) % p
                if v:
                    h[k2] = v
                else:
                    del h[k2]
    else:
        for kk, cc in tail:
            k2 = kk + shift
            v = get(k2)
            if v is None:
                h[k2] = -c * cc
            else:
                v = v - c * cc
                if v:
                    h[k2] = v
                else:
                    del h[k2]


def spoly(a: Elem, b: Elem, R, p: int) -> dict:
    """S-polynomial of two monic elements with equal leading components."""
    lcm = R.lcm_keys(a.lk, b.lk)
    sa = lcm - a.lk
    sb = lcm - b.lk
    h = {kk + sa: cc for kk, cc in a.tail}
    _sub_scaled(h, 1, sb, b.tail, p)
    return h


def mora_nf(f: dict, elems, R, p: int, budget: Budget | None = None, cutoff: int | None = None) -> dict:
    """Mora's weak normal form under a local or mixed order.

    Divisors are chosen by minimal ecart, ties broken by position.  The
    result r satisfies u*f = sum(a_i g_i) + r with a unit u, and the leading
    term of r is not divisible by any leading term.  With ``cutoff`` set,
    terms of degree above it are dropped (valid once every monomial of that
    degree lies in the leading ideal).
    """
    if not f:
        return {}
    s = R._deg_shift
    if cutoff is not None:
        h = {k: c for k, c in f.items() if (k >> s) & 0xFFF <= cutoff}
    else:
        h = dict(f)
    if not h:
        return h
    m = R.EXPMASK
    g = R.GUARD
    rank = R.rank
    T = [(e.lk & m, e.lk & 0xFFF, e.ecart, e.lk, e.tail) for e in elems]
    # every term added by a reduction step is below the current lead, so a
    # max-heap with lazy deletion tracks the lead; a degree histogram tracks
    # the top degree for the ecart
    heap = [-k for k in h]
    heapify(heap)
    hist: dict = {}
    for k in h:
        d = (k >> s) & 0xFFF
        hist[d] = hist.get(d, 0) + 1
    top = max(hist)
    steps = 0
    while heap:
        k = -heappop(heap)
        c = h.get(k)
        if c is None:
            continue
        bk = (k & m) | g
        best = None
        best_ecart = None
        ck = k & 0xFFF
        for le, lc, ec, lk, tail in T:
            if rank and lc != ck:
                continue
            if (bk - le) & g == g:
                if best is None or ec < best_ecart:
                    best = (lk, tail)
                    best_ecart = ec
                    if ec == 0:
                        break
        if best is None:
            heappush(heap, -k)
            break
        dk = (k >> s) & 0xFFF
        eh = top - dk
        if best_ecart > eh:
            lc_inv = pow(c, -1, p) if p else 1 / c
            if p:
                tail = [(kk, cc * lc_inv % p) for kk, cc in h.items() if kk != k]
            else:
                tail = [(kk, cc * lc_inv) for kk, cc in h.items() if kk != k]
            T.append((k & m, ck, eh, k, tail))
        steps += 1
        del h[k]
        hist[dk] -= 1
        lk, tail = best
        shift = k - lk
        get = h.get
        for kk, cc in tail:
            k2 = kk + shift
            d2 = (k2 >> s) & 0xFFF
            if cutoff is not None and d2 > cutoff:
                continue
            v = get(k2)
            if v is None:
                h[k2] = (-c * cc) % p if p else -c * cc
                heappush(heap, -k2)
                hist[d2] = hist.get(d2, 0) + 1
                if d2 > top:
                    top = d2
            else:
                v = (v - c * cc) % p if p else v - c * cc
                if v:
                    h[k2] = v
                else:
                    del h[k2]
                    hist[d2] -= 1
        if hist.get(top, 0) == 0:
            live = [d for d, n in hist.items() if n]
            hist = {d: hist[d] for d in live}
            top = max(live) if live else 0
        if budget is not None and steps & 0x3FF == 0:
            budget.spend(steps)
            steps = 0
    if budget is not None:
        budget.spend(steps)
    return h
