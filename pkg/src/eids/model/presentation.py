"""Matrix presentations of determinantal singularities and their families."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..algebra.fields import QQ
from ..algebra.matrix import PolyMatrix
from ..algebra.orders import degrevlex
from ..algebra.ring import PolyRing
from ..groebner import INFINITE, std_basis
from ..groebner.staircase import krull_dimension


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


@dataclass(frozen=True)
class EidsPresentation:
    """An m x n matrix whose t-minors define the singularity.

    ``geometric_vars`` are the coordinates of the ambient space; any other
    ring variables are treated as parameters.
    """

    matrix: PolyMatrix
    minor_size: int
    geometric_vars: tuple

    def __post_init__(self):
        object.__setattr__(self, "geometric_vars", tuple(self.geometric_vars))
        m, n = self.matrix.shape
        if not 1 <= self.minor_size <= min(m, n):
            raise PreconditionError(f"minor size {self.minor_size} outside 1..{min(m, n)}")
        missing = set(self.geometric_vars) - set(self.ring.variables)
        if missing:
            raise PreconditionError(f"variables {sorted(missing)} not in the matrix ring")

    @property
    def ring(self) -> PolyRing:
        return self.matrix.ring

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def ambient_dim(self) -> int:
        return len(self.geometric_vars)

    @property
    def params(self) -> tuple:
        return tuple(v for v in self.ring.variables if v not in self.geometric_vars)

    @property
    def expected_codim(self) -> int:
        m, n = self.shape
        t = self.minor_size
        return (m - t + 1) * (n - t + 1)

    @property
    def is_maximal(self) -> bool:
        return self.minor_size == min(self.shape)

    def codim(self) -> int:
        """Codimension of the variety of the t-minors (parameters set to zero)."""
        R = PolyRing(self.geometric_vars, degrevlex(self.geometric_vars), self.ring.field)
        zero = {p: 0 for p in self.params}
        M = self.matrix.subs(zero) if zero else self.matrix
        gens = [g.to_ring(R) for g in M.minors(self.minor_size) if g]
        if not gens:
            return 0
        B = std_basis(gens, R, stage="codim")
        return R.nvars - krull_dimension(B)

    def has_expected_codim(self) -> bool:
        return self.codim() == self.expected_codim


def _names(stem, count, taken=()):
    taken = set(taken)
    out = []
    for i in range(1, count + 1):
        name = f"{stem}{i}"
        while name in taken:
            name = name + "_"
        out.append(name)
    return out


def generic_determinantal(m: int, n: int, t: int, field=QQ) -> EidsPresentation:
    """The generic m x n matrix over x1..x_{mn} (row-major) with minor size t."""
    if not 1 <= t <= min(m, n):
        raise PreconditionError("need 1 <= t <= min(m, n)")
    names = _names("x", m * n)
    R = PolyRing(names, field=field)
    gens = R.gens()
    rows = [[gens[i * n + j] for j in range(n)] for i in range(m)]
    return EidsPresentation(PolyMatrix(R, rows), t, names)


def generic_linear_presentation(m: int, n: int, t: int, N: int, seed: int = 0, field=QQ, coeff_range: int = 7) -> EidsPresentation:
    """Entries are linear forms in x1..xN with seeded random integer coefficients."""
    if N < (m - t + 1) * (n - t + 1):
        raise PreconditionError("ambient dimension below the expected codimension")
    rng = random.Random(seed)
    names = _names("x", N)
    R = PolyRing(names, field=field)
    xs = R.gens()
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            f = R.zero()
            for x in xs:
                c = rng.randint(-coeff_range, coeff_range)
                if c:
                    f = f + x.scale(c)
            row.append(f)
        rows.append(row)
    return EidsPresentation(PolyMatrix(R, rows), t, names)


def presentation_from_strings(rows, variables, t: int, params=(), field=QQ) -> EidsPresentation:
    R = PolyRing(list(variables) + list(params), field=field)
    return EidsPresentation(PolyMatrix.from_strings(R, rows), t, tuple(variables))


@dataclass(frozen=True)
class VersalFamily:
    """A family over parameter space; specialising parameters to 0 gives the germ."""

    matrix: PolyMatrix
    minor_size: int
    geometric_vars: tuple
    parameters: tuple
    basis_monomials: tuple = ()
    source: str = "user"
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def ring(self):
        return self.matrix.ring

    @property
    def shape(self):
        return self.matrix.shape

    def special_fibre(self) -> PolyMatrix:
        return self.matrix.subs({p: 0 for p in self.parameters})

    def presentation(self) -> EidsPresentation:
        return EidsPresentation(self.matrix, self.minor_size, self.geometric_vars)

    @classmethod
    def declared(cls, rows, variables, params, t: int, field=QQ) -> "VersalFamily":
        """A user-written family, entries given as strings."""
        R = PolyRing(list(variables) + list(params), field=field)
        M = PolyMatrix.from_strings(R, rows)
        return cls(M, t, tuple(variables), tuple(params), (), "user")


__all__ = [
    "EidsPresentation", "VersalFamily", "PreconditionError", "INFINITE",
    "generic_determinantal", "generic_linear_presentation", "presentation_from_strings",
]
