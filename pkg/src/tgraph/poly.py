"""Sparse multivariate polynomials over exact coefficients in arrow variables.

Coefficients are Python ints or Fractions in characteristic 0, or ints reduced
mod p when the ring carries a prime characteristic.  Exponent vectors are
tuples indexed by the ring's fixed variable list; the monomial order is graded
reverse lexicographic over that list.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class ArrowVar:
    """A cell coordinate: side 0 tracks the first ideal, side 1 the second.

    The natural sort order (side, index, step) is the ring's variable order.
    """

    side: int
    index: int
    step: int

    def label(self):
        prefix = "c" if self.side == 0 else "ct"
        return f"{prefix}{self.index}^{self.step}"


class Ring:
    """A fixed variable list plus characteristic; orders and prints terms."""

    __slots__ = ("vars", "index", "char")

    def __init__(self, variables, char=0):
        self.vars = tuple(variables)
        self.index = {v: i for i, v in enumerate(self.vars)}
        if len(self.index) != len(self.vars):
            raise ValueError("duplicate variables")
        if char and char < 2:
            raise ValueError("characteristic must be 0 or a prime")
        self.char = char

    @property
    def nvars(self):
        return len(self.vars)

    def key(self, exps):
        """Grevlex sort key; larger key means larger monomial."""
        return (sum(exps),) + tuple(-e for e in reversed(exps))

    def coeff(self, c):
        if self.char:
            if isinstance(c, Fraction):
                if c.denominator % self.char == 0:
                    raise ZeroDivisionError("denominator vanishes mod p")
                return c.numerator * pow(c.denominator, -1, self.char) % self.char
            return c % self.char
        return c

    def inv(self, c):
        if self.char:
            return pow(c, -1, self.char)
        return Fraction(1) / Fraction(c)

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.coeff(c)
        if not c:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, v):
        exps = [0] * self.nvars
        exps[self.index[v]] = 1
        return Poly(self, {tuple(exps): self.coeff(1)})

    def poly(self, terms):
        out = {}
        for exps, c in terms.items():
            c = self.coeff(c)
            if c:
                out[tuple(exps)] = c
        return Poly(self, out)

    def term_label(self, exps):
        factors = []
        for v, e in zip(self.vars, exps):
            if e == 1:
                factors.append(v.label())
            elif e > 1:
                factors.append(f"{v.label()}**{e}")
        return "*".join(factors)


class Poly:
    """Immutable-by-convention sparse polynomial bound to a Ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        _accumulate(out, other.terms, 1, self.ring)
        return Poly(self.ring, out)

    def __sub__(self, other):
        out = dict(self.terms)
        _accumulate(out, other.terms, -1, self.ring)
        return Poly(self.ring, out)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, Poly):
            ring = self.ring
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    c = out.get(e, 0) + c1 * c2
                    c = ring.coeff(c)
                    if c:
                        out[e] = c
                    else:
                        out.pop(e, None)
            return Poly(ring, out)
        return self.scale(other)

    def scale(self, c):
        ring = self.ring
        c = ring.coeff(c)
        if not c:
            return Poly(ring, {})
        out = {}
        for e, c0 in self.terms.items():
            cc = ring.coeff(c0 * c)
            if cc:
                out[e] = cc
        return Poly(ring, out)

    def mul_term(self, exps, c):
        ring = self.ring
        c = ring.coeff(c)
        if not c:
            return Poly(ring, {})
        out = {}
        for e, c0 in self.terms.items():
            cc = ring.coeff(c0 * c)
            if cc:
                out[tuple(a + b for a, b in zip(e, exps))] = cc
        return Poly(ring, out)

    def divide_term(self, exps, c):
        """Exact division by a single term; rejects non-divisible input."""
        ring = self.ring
        out = {}
        for e, c0 in self.terms.items():
            q = tuple(a - b for a, b in zip(e, exps))
            if any(x < 0 for x in q):
                raise ValueError("term does not divide every monomial")
            if ring.char:
                cc = ring.coeff(c0 * ring.inv(c))
            else:
                cc = Fraction(c0, 1) / Fraction(c)
                if cc.denominator == 1:
                    cc = cc.numerator
            if cc:
                out[q] = cc
        return Poly(ring, out)

    def lead(self):
        """(exponents, coefficient) of the grevlex-largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        key = self.ring.key
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def monic(self):
        if not self.terms:
            return self
        _, c = self.lead()
        if c == 1:
            return self
        ring = self.ring
        inv = ring.inv(c)
        return Poly(ring, {e: ring.coeff(c0 * inv) for e, c0 in self.terms.items()})

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self):
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = self.ring.term_label(e)
            if not mono:
                body = str(c if c > 0 else -c)
            else:
                mag = c if c > 0 else -c
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


def _accumulate(target, terms, sign, ring):
    for e, c in terms.items():
        c2 = ring.coeff(target.get(e, 0) + sign * c)
        if c2:
            target[e] = c2
        else:
            target.pop(e, None)


def arrow_ring(m_arrows, n_arrows=(), char=0):
    """Ring over the joint arrow coordinates, first ideal's variables first."""
    variables = [ArrowVar(0, i, l) for i, l in sorted(m_arrows)]
    variables += [ArrowVar(1, i, l) for i, l in sorted(n_arrows)]
    return Ring(variables, char=char)
