"""Sparse multivariate polynomials with rational coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable
name, so polynomials in different variable sets combine without any
alignment step.  Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

Monomial = tuple  # tuple[tuple[str, int], ...]

ONE: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class MultiPoly:
    """Immutable polynomial over Q in named variables."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    key = tuple(sorted((v, e) for v, e in mono if e))
                    clean[key] = clean.get(key, 0) + c
                    if not clean[key]:
                        del clean[key]
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({ONE: c})

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def variables(self) -> tuple:
        names = set()
        for mono in self._terms:
            names.update(v for v, _ in mono)
        return tuple(sorted(names))

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    def degree(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self._terms), default=-1)

    def is_constant(self) -> bool:
        return all(m == ONE for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self._terms.get(ONE, Fraction(0))

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly._raw({})
            return MultiPoly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MultiPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def substitute(self, assignment: Mapping[str, object]) -> "MultiPoly":
        """Replace variables by rationals or polynomials; others stay symbolic."""
        subs = {k: (v if isinstance(v, MultiPoly) else MultiPoly.const(v))
                for k, v in assignment.items()}
        out = MultiPoly._raw({})
        power_cache: dict = {}
        for mono, c in self._terms.items():
            term = MultiPoly.const(c)
            keep = []
            for v, e in mono:
                if v in subs:
                    key = (v, e)
                    if key not in power_cache:
                        power_cache[key] = subs[v] ** e
                    term = term * power_cache[key]
                else:
                    keep.append((v, e))
            if keep:
                term = term * MultiPoly._raw({tuple(keep): Fraction(1)})
            out = out + term
        return out

    def evaluate(self, assignment: Mapping[str, object]) -> Fraction:
        return self.substitute(assignment).constant_value()

    def _sort_key(self, mono):
        return (-_mono_degree(mono), mono)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=self._sort_key):
            c = self._terms[mono]
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"MultiPoly({self})"


def variables(*names: str) -> tuple:
    return tuple(MultiPoly.var(n) for n in names)


def as_poly(x) -> MultiPoly:
    return x if isinstance(x, MultiPoly) else MultiPoly.const(x)


def poly_substitute(p, assignment: Mapping[str, object]) -> MultiPoly:
    return as_poly(p).substitute(assignment)
