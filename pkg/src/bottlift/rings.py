"""Sparse exact-integer polynomial arithmetic in evenly graded commutative rings.

A ring here is free graded-commutative on generators that all sit in even
topological degree >= 2, so it is strictly commutative and no sign bookkeeping
is ever needed.  Coefficients are Python ints (arbitrary precision); nothing in
this package ever rounds, so divisibility questions downstream are exact.

Polynomials are stored sparsely as {Monomial: coefficient} with no zero
coefficients, and every operation returns canonical form.  The canonical term
order is graded lexicographic: ascending total degree, and within a degree the
monomial with the higher exponent on the earliest generator comes first
(so in Z[b1,b2,...]:  b1^3 < b1*b2 < b3  in output order).

Generator families may be infinite (b1, b2, ... with deg b_m = 2m); such a
ring is declared through a scheme (symbol prefix + degree function) and every
enumeration query takes an explicit degree bound.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping


class RingMismatchError(ValueError):
    """Raised when an operation mixes polynomials over incompatible rings."""


@dataclass(frozen=True)
class GeneratorScheme:
    """An infinite generator family: symbol `prefix{i}` for i >= start."""

    prefix: str
    start: int
    degree_of: Callable[[int], int]


def _even_degree(sym: str, deg: int) -> int:
    if deg < 2 or deg % 2 != 0:
        raise ValueError(f"generator {sym!r} must have even degree >= 2, got {deg}")
    return deg


class RingSpec:
    """A named free graded-commutative presentation.

    Either `generators` (explicit ordered list of (symbol, degree)) or
    `scheme` must be given.  The generator order is the canonical order used
    for monomial comparison; for a scheme it is subscript order.
    """

    __slots__ = ("name", "generators", "scheme", "_index", "_degree")

    def __init__(
        self,
        name: str,
        generators: Iterable[tuple[str, int]] | None = None,
        scheme: GeneratorScheme | None = None,
    ):
        if (generators is None) == (scheme is None):
            raise ValueError("exactly one of generators/scheme is required")
        self.name = name
        self.scheme = scheme
        if generators is not None:
            gens = tuple(generators)
            index: dict[str, int] = {}
            degree: dict[str, int] = {}
            for pos, (sym, deg) in enumerate(gens):
                if sym in index:
                    raise ValueError(f"duplicate generator {sym!r}")
                index[sym] = pos + 1
                degree[sym] = _even_degree(sym, deg)
            self.generators = gens
            self._index = index
            self._degree = degree
        else:
            self.generators = ()
            self._index = {}
            self._degree = {}

    def __repr__(self) -> str:
        return f"RingSpec({self.name!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingSpec) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def is_compatible(self, other: "RingSpec") -> bool:
        return self == other

    def _check_compatible(self, other: "RingSpec") -> None:
        if not self.is_compatible(other):
            raise RingMismatchError(
                f"incompatible rings: {self.name!r} vs {other.name!r}"
            )

    # -- generator lookup ---------------------------------------------------

    def _scheme_subscript(self, sym: str) -> int | None:
        """Subscript i if sym names scheme generator prefix{i}, else None."""
        s = self.scheme
        if s is None or not sym.startswith(s.prefix):
            return None
        tail = sym[len(s.prefix):]
        if not tail.isdigit():
            return None
        i = int(tail)
        if i < s.start or str(i) != tail:  # reject leading zeros like b01
            return None
        return i

    def has_generator(self, sym: str) -> bool:
        if sym in self._index:
            return True
        return self._scheme_subscript(sym) is not None

    def generator_degree(self, sym: str) -> int:
        if sym in self._degree:
            return self._degree[sym]
        i = self._scheme_subscript(sym)
        if i is None:
            raise KeyError(f"ring {self.name!r} has no generator {sym!r}")
        return _even_degree(sym, self.scheme.degree_of(i))

    def generator_index(self, sym: str) -> int:
        """Position of sym in the canonical generator order."""
        if sym in self._index:
            return self._index[sym]
        i = self._scheme_subscript(sym)
        if i is None:
            raise KeyError(f"ring {self.name!r} has no generator {sym!r}")
        return i

    def generators_up_to(self, max_degree: int) -> list[tuple[str, int]]:
        """All generators of degree <= max_degree, in canonical order.

        Scheme degree functions are assumed nondecreasing in the subscript,
        which holds for every ring in this package (deg = 2*subscript).
        """
        if self.scheme is None:
            return [(s, d) for s, d in self.generators if d <= max_degree]
        out = []
        i = self.scheme.start
        while True:
            deg = self.scheme.degree_of(i)
            if deg > max_degree:
                break
            out.append((f"{self.scheme.prefix}{i}", deg))
            i += 1
        return out

    # -- construction -------------------------------------------------------

    def monomial(self, exponents: Mapping[str, int]) -> "Monomial":
        pairs = []
        for sym, exp in exponents.items():
            if exp == 0:
                continue
            if exp < 0:
                raise ValueError(f"negative exponent for {sym!r}")
            self.generator_degree(sym)  # validates membership
            pairs.append((sym, exp))
        pairs.sort(key=lambda p: self.generator_index(p[0]))
        return Monomial(tuple(pairs))

    def monomial_degree(self, m: "Monomial") -> int:
        return sum(self.generator_degree(s) * e for s, e in m.pairs)

    def sort_key(self, m: "Monomial"):
        """Graded-lex key; sorting ascending yields the canonical term order."""
        return (
            self.monomial_degree(m),
            tuple((self.generator_index(s), -e) for s, e in m.pairs),
        )

    def zero(self) -> "GradedPolynomial":
        return GradedPolynomial(self, {})

    def one(self) -> "GradedPolynomial":
        return self.constant(1)

    def constant(self, c: int) -> "GradedPolynomial":
        if c == 0:
            return self.zero()
        return GradedPolynomial(self, {Monomial(()): int(c)})

    def gen(self, sym: str, exp: int = 1, coeff: int = 1) -> "GradedPolynomial":
        """The polynomial coeff * sym**exp."""
        return GradedPolynomial(self, {self.monomial({sym: exp}): coeff})

    def polynomial(self, terms: Mapping["Monomial", int]) -> "GradedPolynomial":
        return GradedPolynomial(self, dict(terms))


@dataclass(frozen=True)
class Monomial:
    """A product of generator powers: ((symbol, exponent), ...), no zeros.

    Pairs are kept sorted by the owning ring's generator order; construct via
    RingSpec.monomial so that invariant holds.
    """

    pairs: tuple[tuple[str, int], ...]

    def exponent_of(self, sym: str) -> int:
        for s, e in self.pairs:
            if s == sym:
                return e
        return 0

    def is_constant(self) -> bool:
        return not self.pairs

    def single_generator(self) -> str | None:
        """The symbol if this monomial is one generator to the first power."""
        if len(self.pairs) == 1 and self.pairs[0][1] == 1:
            return self.pairs[0][0]
        return None

    def is_decomposable(self) -> bool:
        """True when this is a product of >= 2 positive-degree generators."""
        total = sum(e for _, e in self.pairs)
        return total >= 2

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return "*".join(s if e == 1 else f"{s}^{e}" for s, e in self.pairs)


def _merge_monomials(ring: RingSpec, a: Monomial, b: Monomial) -> Monomial:
    exps: dict[str, int] = dict(a.pairs)
    for s, e in b.pairs:
        exps[s] = exps.get(s, 0) + e
    pairs = sorted(exps.items(), key=lambda p: ring.generator_index(p[0]))
    return Monomial(tuple(pairs))


class GradedPolynomial:
    """Immutable sparse polynomial with exact integer coefficients."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, int]):
        self.ring = ring
        self._terms = {m: int(c) for m, c in terms.items() if c != 0}

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms_in_order(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: self.ring.sort_key(t[0]))

    def iter_terms(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def degrees(self) -> set[int]:
        return {self.ring.monomial_degree(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Degree of a homogeneous polynomial; None for the zero polynomial."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def homogeneous_part(self, d: int) -> "GradedPolynomial":
        if d < 0:
            raise ValueError("degree must be >= 0")
        return GradedPolynomial(
            self.ring,
            {m: c for m, c in self._terms.items() if self.ring.monomial_degree(m) == d},
        )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        self.ring._check_compatible(other.ring)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPolynomial(self.ring, out)

    def __neg__(self) -> "GradedPolynomial":
        return GradedPolynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "GradedPolynomial":
        if isinstance(other, int):
            return GradedPolynomial(
                self.ring, {m: c * other for m, c in self._terms.items()}
            )
        self.ring._check_compatible(other.ring)
        out: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _merge_monomials(self.ring, ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return GradedPolynomial(self.ring, out)

    def __rmul__(self, other: int) -> "GradedPolynomial":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "GradedPolynomial":
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring.name, frozenset(self._terms.items())))

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"<{self.ring.name}: {format_polynomial(self)}>"


# -- canonical text form -----------------------------------------------------
#
# Terms in monomial order, coefficients in decimal, `*` between factors and
# `^` for exponents, e.g.   b1^3 - 3*b1*b2 + 3*b3
# This exact form is what the CLI and the golden tests consume.


def format_polynomial(p: GradedPolynomial) -> str:
    if p.is_zero():
        return "0"
    chunks: list[str] = []
    for m, c in p.terms_in_order():
        mag = abs(c)
        if m.is_constant():
            body = str(mag)
        elif mag == 1:
            body = str(m)
        else:
            body = f"{mag}*{m}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(chunks)


def parse_polynomial(ring: RingSpec, text: str) -> GradedPolynomial:
    """Inverse of format_polynomial (whitespace-tolerant)."""
    s = text.strip()
    if s == "0":
        return ring.zero()
    # split into signed terms
    s = s.replace("-", "+-")
    raw_terms = [t.strip() for t in s.split("+")]
    terms: dict[Monomial, int] = {}
    for raw in raw_terms:
        if not raw:
            continue
        sign = 1
        if raw.startswith("-"):
            sign = -1
            raw = raw[1:].strip()
        if not raw:
            raise ValueError(f"dangling sign in polynomial text {text!r}")
        coeff = sign
        exps: dict[str, int] = {}
        for factor in (f.strip() for f in raw.split("*")):
            if not factor:
                raise ValueError(f"empty factor in term {raw!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            if "^" in factor:
                sym, _, pw = factor.partition("^")
                sym, pw = sym.strip(), pw.strip()
                if not pw.isdigit():
                    raise ValueError(f"bad exponent in factor {factor!r}")
                exp = int(pw)
            else:
                sym, exp = factor, 1
            if not ring.has_generator(sym):
                raise ValueError(f"unknown generator {sym!r} for ring {ring.name!r}")
            exps[sym] = exps.get(sym, 0) + exp
        m = ring.monomial(exps)
        terms[m] = terms.get(m, 0) + coeff
    return GradedPolynomial(ring, terms)


# -- degree-bounded enumeration ----------------------------------------------


def weight(degree: int) -> int:
    """Half the topological degree; partition-style weight of a monomial."""
    if degree % 2 != 0:
        raise ValueError("topological degrees here are even")
    return degree // 2


def monomial_basis(ring: RingSpec, d: int) -> list[Monomial]:
    """All monomials of degree exactly d in graded-lex order.

    Odd d yields [] since every generator degree is even.
    """
    if d < 0:
        raise ValueError("degree must be >= 0")
    gens = ring.generators_up_to(d)
    found: list[Monomial] = []

    def rec(pos: int, remaining: int, acc: list[tuple[str, int]]) -> None:
        if remaining == 0:
            found.append(Monomial(tuple(acc)))
            return
        if pos == len(gens):
            return
        sym, deg = gens[pos]
        max_e = remaining // deg
        for e in range(max_e, -1, -1):
            if e:
                acc.append((sym, e))
            rec(pos + 1, remaining - e * deg, acc)
            if e:
                acc.pop()

    rec(0, d, [])
    found.sort(key=ring.sort_key)
    return found


@functools.lru_cache(maxsize=None)
def poincare_rank(ring: RingSpec, d: int) -> int:
    return len(monomial_basis(ring, d))


def poincare_ranks(ring: RingSpec, max_degree: int) -> list[tuple[int, int]]:
    """(degree, rank) for all even degrees 0..max_degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    return [(d, poincare_rank(ring, d)) for d in range(0, max_degree + 1, 2)]
