"""Ring contexts and packed monomial keys.

A monomial (optionally times a free-module basis vector) is packed into one
Python int, its *key*.  From the top down the key holds the order's weight
rows, then the exponents, the total degree and the component index:

    key = sum_r row_r(e) << shift_r  +  sum_i e_i << shift_i  +  deg << B  +  comp

Row values may be negative (local blocks); the rows are wide enough that
integer comparison of keys is the term order.  Keys are additive, so
multiplying monomials is ``k1 + k2`` and dividing is ``k1 - k2``.  The
exponent area has a guard bit per field, which gives a branch-free
divisibility test and overflow detection.
"""

from __future__ import annotations

from functools import cached_property

from .fields import QQ
from .orders import TermOrder, degrevlex

EXP_BITS = 12
MAX_DEGREE = (1 << (EXP_BITS - 1)) - 1
ROW_BITS = EXP_BITS + 2
_FIELD = (1 << EXP_BITS) - 1
_GUARD = 1 << (EXP_BITS - 1)


class DegreeOverflow(OverflowError):
    pass


class PolyRing:
    """k[variables] (rank 0) or the free module k[variables]^rank, with an order."""

    def __init__(self, variables, order: TermOrder | None = None, field=QQ, rank: int = 0):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for v in variables:
            if not v.isidentifier():
                raise ValueError(f"bad variable name {v!r}")
        if order is None:
            order = degrevlex(variables) if variables else None
        self.variables = variables
        self.nvars = len(variables)
        self.order = order
        self.field = field
        self.rank = int(rank)
        if self.rank >= 1 << (EXP_BITS - 1):
            raise ValueError("module rank too large")
        self.index = {v: i for i, v in enumerate(variables)}
        n = self.nvars
        rows = order.weight_rows(variables) if n else []
        if self.rank:
            # component row; value rank-1-i ranks component 0 highest
            comp_row_pos = len(rows) if order is None or order.module_rule == "TOP" else 0
        else:
            comp_row_pos = None
        self._rows = rows
        self._comp_row_pos = comp_row_pos
        nrows = len(rows) + (1 if self.rank else 0)
        # exponent area: comp | deg | e_0 .. e_{n-1}
        self._exp_shift = [EXP_BITS * (2 + i) for i in range(n)]
        self._deg_shift = EXP_BITS
        base = EXP_BITS * (2 + n)
        self._area_bits = base
        self._row_shift = [base + ROW_BITS * (nrows - 1 - r) for r in range(nrows)]
        self.EXPMASK = (1 << base) - 1
        guard = 0
        for s in self._exp_shift + [self._deg_shift]:
            guard |= _GUARD << s
        self.GUARD = guard
        self.DEG_GUARD = _GUARD << self._deg_shift
        self.COMPMASK = _FIELD
        # per-variable keys
        self._var_keys = [self._pack(tuple(1 if j == i else 0 for j in range(n)), None) for i in range(n)]
        self.one_key = 0

    # -- identity ---------------------------------------------------------
    def _ident(self):
        return (self.variables, self.order, self.field, self.rank)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        base = f"{self.field}[{','.join(self.variables)}]"
        if self.rank:
            base += f"^{self.rank}"
        return f"PolyRing({base}, {self.order})"

    # -- derived rings ------------------------------------------------------
    def with_order(self, order: TermOrder) -> "PolyRing":
        return PolyRing(self.variables, order, self.field, self.rank)

    def with_field(self, field) -> "PolyRing":
        return PolyRing(self.variables, self.order, field, self.rank)

    def with_rank(self, rank: int) -> "PolyRing":
        return PolyRing(self.variables, self.order, self.field, rank)

    @cached_property
    def base_ring(self) -> "PolyRing":
        return self if not self.rank else self.with_rank(0)

    # -- packing -------------------------------------------------------------
    def _pack(self, exps, comp):
        key = 0
        deg = 0
        for e, s in zip(exps, self._exp_shift):
            if e < 0:
                raise ValueError("negative exponent")
            key |= e << s
            deg += e
        if deg > MAX_DEGREE:
            raise DegreeOverflow(f"total degree {deg} exceeds {MAX_DEGREE}")
        key |= deg << self._deg_shift
        rows = self._rows
        shifts = self._row_shift
        cpos = self._comp_row_pos
        r_index = 0
        for pos in range(len(shifts)):
            if pos == cpos:
                val = (self.rank - 1 - comp) if comp is not None else 0
            else:
                row = rows[r_index]
                r_index += 1
                val = 0
                for w, e in zip(row, exps):
                    if w and e:
                        val += w * e
            key += val << shifts[pos]
        if comp is not None:
            key += comp
        return key

    def key(self, exps, comp: int | None = None) -> int:
        """Pack an exponent vector (and a component for module rings)."""
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        if self.rank:
            if comp is None:
                comp = None  # a ring monomial used as a multiplier
            elif not 0 <= comp < self.rank:
                raise ValueError(f"component {comp} out of range")
        elif comp:
            raise ValueError("components only exist in module rings")
        return self._pack(exps, comp)

    def exps(self, key: int) -> tuple[int, ...]:
        return tuple((key >> s) & _FIELD for s in self._exp_shift)

    def comp(self, key: int) -> int:
        return key & _FIELD

    def deg(self, key: int) -> int:
        return (key >> self._deg_shift) & _FIELD

    def var_key(self, name_or_index) -> int:
        i = name_or_index if isinstance(name_or_index, int) else self.index[name_or_index]
        return self._var_keys[i]

    def unit_vector_key(self, comp: int) -> int:
        return self._pack((0,) * self.nvars, comp)

    def ring_part(self, key: int) -> int:
        """Strip the component from a module key, leaving a ring-monomial key."""
        if not self.rank:
            return key
        return key - self.unit_vector_key(self.comp(key))

    # -- monomial arithmetic on keys ---------------------------------------
    def mul_keys(self, a: int, b: int) -> int:
        k = a + b
        if k & self.DEG_GUARD:
            raise DegreeOverflow("monomial degree overflow")
        return k

    def divides(self, a: int, b: int) -> bool:
        """True if monomial ``a`` divides ``b`` (same component for modules)."""
        if self.rank and (a ^ b) & _FIELD:
            return False
        m = self.EXPMASK
        g = self.GUARD
        return (((b & m) | g) - (a & m)) & g == g

    def lcm_keys(self, a: int, b: int) -> int:
        ea, eb = self.exps(a), self.exps(b)
        comp = self.comp(a) if self.rank else None
        return self._pack(tuple(x if x > y else y for x, y in zip(ea, eb)), comp)

    def gcd_keys(self, a: int, b: int) -> int:
        ea, eb = self.exps(a), self.exps(b)
        return self._pack(tuple(x if x < y else y for x, y in zip(ea, eb)), None)

    def coprime(self, a: int, b: int) -> bool:
        ea, eb = self.exps(a), self.exps(b)
        return not any(x and y for x, y in zip(ea, eb))

    def compare(self, a: int, b: int) -> int:
        return (a > b) - (a < b)

    def convert_key(self, key: int, source: "PolyRing") -> int:
        """Re-pack a key of ``source`` in this ring (variables matched by name)."""
        e = source.exps(key)
        out = [0] * self.nvars
        for name, x in zip(source.variables, e):
            if x:
                try:
                    out[self.index[name]] = x
                except KeyError:
                    raise ValueError(f"variable {name} not in target ring") from None
        comp = source.comp(key) if source.rank else None
        if comp is not None and not self.rank:
            if comp:
                raise ValueError("cannot move a module element into a ring")
            comp = None
        return self._pack(tuple(out), comp)

    # -- element constructors ------------------------------------------------
    def gens(self):
        from .poly import Poly

        return tuple(Poly(self.base_ring, {k: self.field.one}) for k in self._var_keys)

    def gen(self, name):
        from .poly import Poly

        return Poly(self.base_ring, {self.var_key(name): self.field.one})

    def __call__(self, value):
        """Coerce a constant, a string or a Poly of a compatible ring."""
        from .poly import Poly

        base = self.base_ring
        if isinstance(value, Poly):
            return value.to_ring(base)
        if isinstance(value, str):
            from .parsing import parse_poly

            return parse_poly(value, base)
        c = self.field(value)
        return Poly(base, {0: c} if c else {})

    def zero(self):
        from .poly import Poly

        return Poly(self.base_ring, {})

    def one(self):
        return self(1)
