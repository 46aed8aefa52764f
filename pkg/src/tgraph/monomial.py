"""Monomials, gradings, and finite-colength monomial ideals in k[x,y].

Monomials are bare exponent pairs ``(a, b)`` standing for x^a*y^b.  A grading
is a coprime positive pair (alpha, beta) with deg x = alpha and deg y = beta.
Two monomials lie in the same degree class exactly when their weights
alpha*a + beta*b agree, and each class is a finite chain under the shift
r = x^beta * y^-alpha.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from math import gcd

Mono = tuple  # (a, b) exponent pair


class TermSide(Enum):
    """Which of the two class-chain directions counts as smaller.

    X_SMALL: within a degree class the monomial with larger y-exponent is
    larger (lex with x < y, restricted to a class).  Y_SMALL is the reverse.
    """

    X_SMALL = "x_small"
    Y_SMALL = "y_small"

    def flip(self):
        return TermSide.Y_SMALL if self is TermSide.X_SMALL else TermSide.X_SMALL


def side_key(m, side):
    """Sort key: larger key means larger monomial within its degree class."""
    return m[1] if side is TermSide.X_SMALL else m[0]


@dataclass(frozen=True)
class Grading:
    """Coprime positive weights (alpha, beta) for deg x, deg y."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("grading weights must be positive")
        if gcd(self.alpha, self.beta) != 1:
            raise ValueError("grading weights must be coprime")

    def weight(self, m):
        return self.alpha * m[0] + self.beta * m[1]

    def shift(self, m, steps):
        """m * r^steps, or None when the result is not a monomial."""
        a = m[0] + steps * self.beta
        b = m[1] - steps * self.alpha
        if a < 0 or b < 0:
            return None
        return (a, b)

    def distance(self, m, m2):
        """Number of r-shifts between two monomials of equal weight."""
        if self.weight(m) != self.weight(m2):
            raise ValueError(f"monomials {m} and {m2} are not in one degree class")
        steps, rem = divmod(abs(m[0] - m2[0]), self.beta)
        assert rem == 0, (m, m2, self)
        return steps

    def monomials_of_weight(self, w):
        """All monomials of weight w, ordered by increasing y-exponent."""
        out = []
        for b in range(w // self.beta + 1):
            rest = w - self.beta * b
            if rest % self.alpha == 0:
                out.append((rest // self.alpha, b))
        return out

    def swap(self):
        return Grading(self.beta, self.alpha)


def compare(m, m2, side):
    """Three-way term-order comparison; -1 means m is smaller.

    Lexicographic with the side's preferred variable smallest; restricted to
    one degree class this is the chain order, where only the comparison of
    the two axis directions matters.
    """
    if side is TermSide.X_SMALL:
        k, k2 = (m[1], m[0]), (m2[1], m2[0])
    else:
        k, k2 = m, m2
    return (k > k2) - (k < k2)


@dataclass(frozen=True)
class MonomialIdeal2:
    """Finite-colength monomial ideal in k[x,y], by sorted minimal generators.

    Generators are stored with strictly increasing y-exponent and strictly
    decreasing x-exponent; the first is a pure x power and the last a pure
    y power, so the quotient is finite dimensional.
    """

    gens: tuple

    def __post_init__(self):
        gens = tuple((int(a), int(b)) for a, b in self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise ValueError("empty generator list")
        for (a, b), (a2, b2) in zip(gens, gens[1:]):
            if not (a > a2 and b < b2):
                raise ValueError(f"generators not a sorted minimal staircase: {gens}")
        if any(a < 0 or b < 0 for a, b in gens):
            raise ValueError("negative exponent in generator")
        if gens[0][1] != 0 or gens[-1][0] != 0:
            raise ValueError("infinite colength: pure powers of x and y required")
        be = gens[-1][1]
        thr = []
        for b in range(be):
            thr.append(min(a for a, bb in gens if bb <= b))
        object.__setattr__(self, "_thr", tuple(thr))
        object.__setattr__(self, "colength", sum(thr))

    @classmethod
    def from_partition(cls, parts):
        """Build from a weakly decreasing list of row lengths."""
        parts = list(parts)
        if any(p <= 0 for p in parts) or any(
            p < q for p, q in zip(parts, parts[1:])
        ):
            raise ValueError(f"not a partition: {parts}")
        thr = parts + [0]
        gens = []
        prev = None
        for b, t in enumerate(thr):
            if prev is None or t < prev:
                gens.append((t, b))
                prev = t
        return cls(tuple(gens))

    def to_partition(self):
        return list(self._thr)

    @property
    def a0(self):
        return self.gens[0][0]

    @property
    def be(self):
        return self.gens[-1][1]

    def contains(self, m):
        a, b = m
        if a < 0 or b < 0:
            return False
        if b >= self.be:
            return True
        return a >= self._thr[b]

    def row_threshold(self, b):
        """Least x-exponent of the ideal in row b."""
        return self._thr[b] if b < self.be else 0

    def standard_monomials(self):
        """All monomials outside the ideal; their count is the colength."""
        return tuple(
            (a, b) for b in range(self.be) for a in range(self._thr[b])
        )

    def j_index(self, m):
        """Largest generator index dividing m."""
        a, b = m
        for j in range(len(self.gens) - 1, -1, -1):
            ga, gb = self.gens[j]
            if ga <= a and gb <= b:
                return j
        raise ValueError(f"{format_monomial(m)} is not in the ideal")

    def swap(self):
        """The image under exchanging x and y."""
        return MonomialIdeal2(tuple(sorted(((b, a) for a, b in self.gens),
                                           key=lambda m: m[1])))

    def socle_weight(self, g):
        """Largest weight carrying a standard monomial (-1 for the unit ideal)."""
        best = -1
        for b in range(self.be):
            best = max(best, g.alpha * (self._thr[b] - 1) + g.beta * b)
        return best

    def monomials_of_weight(self, w, g):
        """Members of the ideal in one degree class, by increasing y-exponent."""
        return [m for m in g.monomials_of_weight(w) if self.contains(m)]

    def __str__(self):
        return format_ideal(self)

    def __repr__(self):
        return f"MonomialIdeal2({self.gens!r})"


UNIT_IDEAL = MonomialIdeal2(((0, 0),))


@dataclass(frozen=True)
class HilbertFunction:
    """Weight-indexed dimensions of the quotient, finite support, hashable."""

    values: tuple  # sorted ((weight, count), ...) with count > 0

    def get(self, w):
        for ww, c in self.values:
            if ww == w:
                return c
        return 0

    def support(self):
        return tuple(w for w, _ in self.values)

    def total(self):
        return sum(c for _, c in self.values)

    def as_dict(self):
        return dict(self.values)


def hilbert_function(M, g):
    """Count standard monomials of M per degree class."""
    counts = {}
    for m in M.standard_monomials():
        w = g.weight(m)
        counts[w] = counts.get(w, 0) + 1
    return HilbertFunction(tuple(sorted(counts.items())))


def colon_box(box, M):
    """Quotient of the complete-intersection box ideal <x^r1, y^r2> by M.

    The box exponents must satisfy x^r1, y^r2 in M.  The result is again a
    finite-colength monomial ideal, of colength r1*r2 - colength(M).
    """
    r1, r2 = box
    if r1 < M.a0 or r2 < M.be:
        raise ValueError(f"box ({r1},{r2}) does not contain the pure powers of {M}")
    thr = []
    for b in range(r2):
        need = [r1 - ga for ga, gb in M.gens if gb + b < r2]
        thr.append(max(0, max(need, default=0)))
    while thr and thr[-1] == 0:
        thr.pop()
    if not thr:
        return UNIT_IDEAL
    return MonomialIdeal2.from_partition(thr)


def minimal_box(M, N):
    """Smallest box ideal containing the pure-power generators of both."""
    return (max(M.a0, N.a0), max(M.be, N.be))


def partitions(d):
    """All partitions of d, in decreasing lexicographic order of parts."""
    if d == 0:
        yield ()
        return
    parts = [d]
    while True:
        yield tuple(parts)
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        head = parts[i] - 1
        rest = len(parts) - i - 1 + parts[i]
        parts = parts[:i]
        while rest > 0:
            take = min(head, rest)
            parts.append(take)
            rest -= take


def enumerate_ideals(d):
    """All monomial ideals of colength d, one per partition, deterministic."""
    if d < 1:
        raise ValueError("colength must be at least 1")
    return [MonomialIdeal2.from_partition(p) for p in partitions(d)]


_MONO_FACTOR = re.compile(r"(x|y)(?:\^(\d+))?")


def parse_monomial(text):
    """Parse "x^a*y^b" style text ("1" for the unit monomial)."""
    s = text.strip()
    if s == "1":
        return (0, 0)
    a = b = 0
    pos = 0
    expect_factor = True
    while pos < len(s):
        if not expect_factor:
            if s[pos] != "*":
                raise ValueError(f"expected '*' at position {pos} in {text!r}")
            pos += 1
            expect_factor = True
            continue
        m = _MONO_FACTOR.match(s, pos)
        if not m:
            raise ValueError(f"expected variable at position {pos} in {text!r}")
        e = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "x":
            a += e
        else:
            b += e
        pos = m.end()
        expect_factor = False
    if expect_factor:
        raise ValueError(f"dangling '*' at end of {text!r}")
    return (a, b)


def format_monomial(m):
    a, b = m
    parts = []
    if a == 1:
        parts.append("x")
    elif a > 1:
        parts.append(f"x^{a}")
    if b == 1:
        parts.append("y")
    elif b > 1:
        parts.append(f"y^{b}")
    return "*".join(parts) if parts else "1"


def parse_ideal(text):
    """Parse "<x^5, x^3*y^2, y^4>" into a MonomialIdeal2."""
    s = text.strip()
    if not (s.startswith("<") and s.endswith(">")):
        raise ValueError(f"ideal text must be wrapped in <...>: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise ValueError("empty ideal text")
    gens = [parse_monomial(part) for part in body.split(",")]
    gens = sorted(set(gens), key=lambda m: (m[1], m[0]))
    minimal = [m for m in gens
               if not any(g != m and g[0] <= m[0] and g[1] <= m[1] for g in gens)]
    return MonomialIdeal2(tuple(minimal))


def format_ideal(M):
    return "<" + ", ".join(format_monomial(m) for m in M.gens) + ">"
