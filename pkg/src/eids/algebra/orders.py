"""Block term orders, global, local and mixed, with a module extension.

An order is a sequence of blocks, each a (kind, variables) pair, compared
in turn.  Within a block the variables are listed by decreasing priority.
Every order is realised as an integer weight matrix, which is what the
ring uses to pack monomials into order-preserving integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

LEX = "lex"
DEGREVLEX = "degrevlex"
NEGLEX = "neglex"
NEGDEGREVLEX = "negdegrevlex"
WDEGREVLEX = "wdegrevlex"

KINDS = (LEX, DEGREVLEX, NEGLEX, NEGDEGREVLEX, WDEGREVLEX)
_ALIASES = {
    "lp": LEX,
    "lex": LEX,
    "dp": DEGREVLEX,
    "degrevlex": DEGREVLEX,
    "ls": NEGLEX,
    "neglex": NEGLEX,
    "neg-lex": NEGLEX,
    "ds": NEGDEGREVLEX,
    "negdegrevlex": NEGDEGREVLEX,
    "neg-deg-ordering": NEGDEGREVLEX,
    "wp": WDEGREVLEX,
    "wdegrevlex": WDEGREVLEX,
}

TOP = "TOP"
POT = "POT"


def _kind(name: str) -> str:
    try:
        return _ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown block ordering {name!r}") from None


@dataclass(frozen=True)
class Block:
    kind: str
    variables: tuple[str, ...]
    weights: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", _kind(self.kind))
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.variables:
            raise ValueError("empty block")
        if self.kind == WDEGREVLEX:
            if len(self.weights) != len(self.variables) or min(self.weights) <= 0:
                raise ValueError("weighted block needs one positive weight per variable")
        elif self.weights:
            raise ValueError("weights only apply to wdegrevlex blocks")

    @property
    def is_global(self) -> bool:
        return self.kind in (LEX, DEGREVLEX, WDEGREVLEX)

    def rows(self) -> list[dict[str, int]]:
        """Weight rows for this block, as sparse {variable: weight} maps."""
        vs = self.variables
        if self.kind == LEX:
            return [{v: 1} for v in vs]
        if self.kind == NEGLEX:
            return [{v: -1} for v in vs]
        if self.kind == WDEGREVLEX:
            return [dict(zip(vs, self.weights))] + [{v: -1} for v in reversed(vs[1:])]
        sign = 1 if self.kind == DEGREVLEX else -1
        rows = [{v: sign for v in vs}]
        rows += [{v: -1} for v in reversed(vs[1:])]
        return rows


@dataclass(frozen=True)
class TermOrder:
    """Ordered blocks plus the module rule (TOP or POT).

    Components are ranked by ascending index: component 0 beats 1 beats 2.
    """

    blocks: tuple[Block, ...]
    module_rule: str = TOP
    _names: tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blocks = tuple(b if isinstance(b, Block) else Block(*b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        names = tuple(v for b in blocks for v in b.variables)
        if len(set(names)) != len(names):
            raise ValueError("blocks must partition the variables")
        if self.module_rule not in (TOP, POT):
            raise ValueError(f"unknown module rule {self.module_rule!r}")
        object.__setattr__(self, "_names", names)

    @property
    def variables(self) -> tuple[str, ...]:
        return self._names

    @property
    def is_global(self) -> bool:
        return all(b.is_global for b in self.blocks)

    @property
    def is_local(self) -> bool:
        return not any(b.is_global for b in self.blocks)

    @property
    def kind(self) -> str:
        if self.is_global:
            return "global"
        return "local" if self.is_local else "mixed"

    def local_variables(self) -> tuple[str, ...]:
        return tuple(v for b in self.blocks if not b.is_global for v in b.variables)

    def global_variables(self) -> tuple[str, ...]:
        return tuple(v for b in self.blocks if b.is_global for v in b.variables)

    def weight_rows(self, variables) -> list[list[int]]:
        index = {v: i for i, v in enumerate(variables)}
        if set(index) != set(self._names):
            raise ValueError("order blocks do not partition the ring variables")
        out = []
        for b in self.blocks:
            for row in b.rows():
                r = [0] * len(variables)
                for v, w in row.items():
                    r[index[v]] = w
                out.append(r)
        return out

    def grading(self):
        """{variable: weight} when every block is weighted, else None."""
        if not all(b.kind == WDEGREVLEX for b in self.blocks):
            return None
        return {v: w for b in self.blocks for v, w in zip(b.variables, b.weights)}

    def with_module_rule(self, rule: str) -> "TermOrder":
        return TermOrder(self.blocks, rule)

    def __str__(self):
        inner = ", ".join(
            f"{b.kind}({','.join(b.variables)}" + (f"; {','.join(map(str, b.weights))})" if b.weights else ")")
            for b in self.blocks
        )
        return f"[{inner}; {self.module_rule}]"


def single(kind: str, variables) -> TermOrder:
    return TermOrder((Block(kind, tuple(variables)),))


def degrevlex(variables) -> TermOrder:
    return single(DEGREVLEX, variables)


def lex(variables) -> TermOrder:
    return single(LEX, variables)


def negdegrevlex(variables) -> TermOrder:
    return single(NEGDEGREVLEX, variables)


def neglex(variables) -> TermOrder:
    return single(NEGLEX, variables)


def blocks(*specs, module_rule: str = TOP) -> TermOrder:
    """``blocks(("lex", ["s","t"]), ("neglex", ["w","z"]))``; empty blocks are dropped.

    A weighted block is ``("wp", vars, weights)``.
    """
    return TermOrder(tuple(Block(*spec) for spec in specs if len(spec[1])), module_rule)


def wdegrevlex(variables, weights) -> TermOrder:
    return TermOrder((Block(WDEGREVLEX, tuple(variables), tuple(weights)),))


def elimination(drop, keep, kind: str = DEGREVLEX) -> TermOrder:
    """Two-block order eliminating ``drop``: any monomial involving them beats the rest."""
    return blocks((kind, list(drop)), (kind, list(keep)))
