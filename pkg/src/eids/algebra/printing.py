"""Deterministic text form of polynomials.

Terms are written in descending degrevlex order over the ring's variable
list, independent of the ring's own term order, so two equal polynomials
print identically whatever order they were computed under.
"""

from __future__ import annotations


def _degrevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def format_monomial(names, exps) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(names, field, items) -> str:
    """``items``: iterable of (exponent tuple, coefficient)."""
    items = sorted(items, key=lambda t: _degrevlex_key(t[0]), reverse=True)
    if not items:
        return "0"
    out = []
    for exps, c in items:
        frac = field.to_fraction(c)
        neg = frac < 0
        mag = -frac if neg else frac
        mono = format_monomial(names, exps)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if out:
            out.append(("-" if neg else "+") + body)
        else:
            out.append(("-" if neg else "") + body)
    return "".join(out)


def format_poly(f) -> str:
    R = f.ring
    return format_terms(R.variables, R.field, ((R.exps(k), c) for k, c in f.terms.items()))
