"""Sparse polynomials and free-module elements over a PolyRing.

Both are immutable wrappers around a ``{key: coeff}`` dict with no zero
coefficients.  Because keys compare like the ring's term order, the
leading term is simply ``max(terms)``.
"""

from __future__ import annotations

from .ring import DegreeOverflow, PolyRing


def _check_same(a, b):
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")


class _Element:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries --------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, _Element):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int,)) and not isinstance(self, Vector):
            return self == self.ring(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def lm(self) -> int:
        """Leading key under the ring order."""
        if not self.terms:
            raise ValueError("zero has no leading monomial")
        return max(self.terms)

    def lc(self):
        return self.terms[self.lm()]

    def sorted_terms(self):
        """(key, coeff) pairs in descending term order."""
        return sorted(self.terms.items(), reverse=True)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        d = self.ring.deg
        return max(d(k) for k in self.terms)

    def min_degree(self) -> int:
        d = self.ring.deg
        return min(d(k) for k in self.terms)

    def ecart(self) -> int:
        return self.total_degree() - self.ring.deg(self.lm())

    # -- arithmetic -------------------------------------------------------------
    def _new(self, terms):
        return type(self)(self.ring, terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        _check_same(self, other)
        p = self.ring.field.char
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = (v + c) % p if p else v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.char
        if p:
            return self._new({k: (-c) % p for k, c in self.terms.items()})
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c):
        """Multiply by a field constant."""
        F = self.ring.field
        c = F(c)
        if not c:
            return self._new({})
        p = F.char
        if p:
            return self._new({k: v * c % p for k, v in self.terms.items()})
        return self._new({k: v * c for k, v in self.terms.items()})

    def mul_term(self, key: int, c):
        """Multiply by the term c * monomial(key); ``key`` is a ring-monomial key."""
        R = self.ring
        p = R.field.char
        guard = R.DEG_GUARD
        out = {}
        for k, v in self.terms.items():
            kk = k + key
            if kk & guard:
                raise DegreeOverflow("monomial degree overflow")
            out[kk] = v * c % p if p else v * c
        return self._new(out)

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def map_coefficients(self, f, ring=None):
        ring = ring or self.ring
        out = {}
        for k, c in self.terms.items():
            v = f(c)
            if v:
                out[k] = v
        return type(self)(ring, out)

    def to_ring(self, ring: PolyRing):
        """Re-express in another ring with the same field (variables matched by name)."""
        if ring == self.ring:
            return self
        src = self.ring
        conv = ring.convert_key
        if ring.field != src.field:
            F = ring.field
            src_f = src.field
            return type(self)(
                ring,
                {k: v for k, v in ((conv(k, src), F(src_f.to_fraction(c) if src_f.char else c)) for k, c in self.terms.items()) if v},
            )
        return type(self)(ring, {conv(k, src): c for k, c in self.terms.items()})

    def variables(self) -> set:
        used = set()
        R = self.ring
        for k in self.terms:
            for name, e in zip(R.variables, R.exps(k)):
                if e:
                    used.add(name)
        return used

    def degree_in(self, names) -> int:
        """Maximal total degree in the given variables (-1 for zero)."""
        R = self.ring
        idx = [R.index[n] for n in names]
        best = -1
        for k in self.terms:
            e = R.exps(k)
            best = max(best, sum(e[i] for i in idx))
        return best

    def order_in(self, names) -> int:
        """Minimal total degree in the given variables; the order at the origin."""
        if not self.terms:
            raise ValueError("the zero polynomial has no order")
        R = self.ring
        idx = [R.index[n] for n in names]
        return min(sum(R.exps(k)[i] for i in idx) for k in self.terms)


class Poly(_Element):
    """A polynomial; ``ring.rank`` must be 0."""

    __slots__ = ()

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, Vector):
            return NotImplemented
        try:
            return self.ring(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Vector):
            return other.__rmul__(self)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        _check_same(self, other)
        R = self.ring
        p = R.field.char
        guard = R.DEG_GUARD
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                v = get(k)
                if v is None:
                    out[k] = ca * cb
                else:
                    out[k] = v + ca * cb
        if p:
            out = {k: v % p for k, v in out.items() if v % p}
        else:
            out = {k: v for k, v in out.items() if v}
        for k in out:
            if k & guard:
                raise DegreeOverflow("monomial degree overflow")
        return Poly(R, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_coefficient(self):
        return self.terms.get(0, self.ring.field.zero)

    def diff(self, var):
        R = self.ring
        i = var if isinstance(var, int) else R.index[var]
        vk = R.var_key(i)
        p = R.field.char
        out = {}
        for k, c in self.terms.items():
            e = R.exps(k)[i]
            if e:
                v = c * e % p if p else c * e
                if v:
                    out[k - vk] = v
        return Poly(R, out)

    def subs(self, values: dict):
        """Substitute Polys (or constants) for variables, by name."""
        R = self.ring
        sub = {R.index[n]: (v if isinstance(v, Poly) else R(v)) for n, v in values.items()}
        for v in sub.values():
            _check_same(self, v)
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = sub[i] ** e
            return powers[key]

        out = R.zero()
        acc: dict = {}
        for k, c in self.terms.items():
            e = list(R.exps(k))
            term_poly = None
            for i in sub:
                if e[i]:
                    f = power(i, e[i])
                    term_poly = f if term_poly is None else term_poly * f
                    e[i] = 0
            rest = R.key(e)
            if term_poly is None:
                acc[rest] = acc.get(rest, 0) + c
            else:
                out = out + term_poly.mul_term(rest, c)
        p = R.field.char
        if p:
            acc = {k: v % p for k, v in acc.items() if v % p}
        else:
            acc = {k: v for k, v in acc.items() if v}
        return out + Poly(R, acc)

    def evaluate(self, values: dict):
        """Substitute constants for (some) variables; returns a Poly."""
        return self.subs({n: self.ring(v) for n, v in values.items()})

    def homogeneous_in(self, names) -> bool:
        if not self.terms:
            return True
        R = self.ring
        idx = [R.index[n] for n in names]
        degs = {sum(R.exps(k)[i] for i in idx) for k in self.terms}
        return len(degs) == 1

    def primitive_integer(self):
        """Scale a rational polynomial to a primitive integer polynomial (positive lc)."""
        from math import gcd, lcm

        if not self.terms or self.ring.field.char:
            return self
        den = 1
        for c in self.terms.values():
            den = lcm(den, int(c.denominator))
        nums = {k: int(c * den) for k, c in self.terms.items()}
        g = 0
        for v in nums.values():
            g = gcd(g, v)
        if nums[self.lm()] < 0:
            g = -g
        F = self.ring.field
        return Poly(self.ring, {k: F(v // g) for k, v in nums.items()})

    def __str__(self):
        from .printing import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"Poly({self})"


class Vector(_Element):
    """An element of a free module ``ring^rank``."""

    __slots__ = ()

    @classmethod
    def from_components(cls, ring: PolyRing, comps) -> "Vector":
        """Build from a sequence of Polys (one per component, over ``ring.base_ring``)."""
        if not ring.rank:
            raise ValueError("not a module ring")
        comps = list(comps)
        if len(comps) != ring.rank:
            raise ValueError(f"expected {ring.rank} components")
        base = ring.base_ring
        out = {}
        for i, f in enumerate(comps):
            if not isinstance(f, Poly):
                f = base(f)
            f = f.to_ring(base)
            ek = ring.unit_vector_key(i)
            for k, c in f.terms.items():
                out[k + ek] = c
        return cls(ring, out)

    @classmethod
    def unit(cls, ring: PolyRing, i: int) -> "Vector":
        return cls(ring, {ring.unit_vector_key(i): ring.field.one})

    def _coerce(self, other):
        if isinstance(other, Vector):
            return other
        return NotImplemented

    def __rmul__(self, other):
        """Scalar (Poly or constant) times vector."""
        R = self.ring
        if not isinstance(other, Poly):
            return self.scale(other)
        f = other.to_ring(R.base_ring)
        out = Vector(R, {})
        for k, c in f.terms.items():
            out = out + self.mul_term(k, c)
        return out

    __mul__ = __rmul__

    def component(self, i: int) -> Poly:
        R = self.ring
        base = R.base_ring
        ek = R.unit_vector_key(i)
        return Poly(base, {k - ek: c for k, c in self.terms.items() if R.comp(k) == i})

    def components(self) -> list:
        return [self.component(i) for i in range(self.ring.rank)]

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.components()) + "]"

    def __repr__(self):
        return f"Vector({self})"


FreeModuleElement = Vector
