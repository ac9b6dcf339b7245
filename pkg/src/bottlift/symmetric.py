"""Newton polynomials, power sums, and the coproduct on Z[b1,b2,...].

Two genuinely different algorithms compute the expression of the power sum
t_1^m + ... + t_k^m in elementary symmetric polynomials:

* `newton_polynomial` runs the Newton-identity recursion
      p_m = e_1 p_{m-1} - e_2 p_{m-2} + ... + (-1)^{m-1} m e_m,
* `brute_force_newton` expands the power sum in Z[t_1,...,t_k] and rewrites
  it by greedy leading-term elimination against the elementary symmetric
  polynomials (the classical fundamental-theorem algorithm).

They are kept independent so each is an honest cross-check of the other.

`power_sum_s(m)` transplants the Newton polynomial into Z[b1,b2,...] by the
pure renaming s_j -> b_j (degrees match: both sit in degree 2j).  The
coproduct psi(b_n) = sum_{i+j=n} b_i (x) b_j, extended as a ring map,
certifies that these power sums are primitive.
"""

from __future__ import annotations

import functools
from itertools import combinations

from .rings import (
    GeneratorScheme,
    GradedPolynomial,
    Monomial,
    RingSpec,
    _merge_monomials,
)

#: Ambient ring of elementary symmetric generators s1, s2, ... (deg s_j = 2j).
SIGMA_RING = RingSpec("sigma", scheme=GeneratorScheme("s", 1, lambda i: 2 * i))

#: Z[b1, b2, ...] with deg b_m = 2m; the monomial-generator homology of BU.
BU_HOMOLOGY_RING = RingSpec("bu_homology", scheme=GeneratorScheme("b", 1, lambda i: 2 * i))


@functools.cache
def newton_polynomial(m: int) -> GradedPolynomial:
    """The m-th Newton polynomial q_m over SIGMA_RING.

    q_m(e_1,...,e_m) equals the m-th power sum in any number k >= m of
    variables; computed by the Newton-identity recursion.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    acc = SIGMA_RING.gen(f"s{m}", coeff=(-1) ** (m - 1) * m)
    for i in range(1, m):
        sign = 1 if i % 2 == 1 else -1
        acc = acc + sign * (SIGMA_RING.gen(f"s{i}") * newton_polynomial(m - i))
    return acc


# The oracle stores a monomial of Z[t_1,...,t_k] as one integer: 8 bits per
# exponent, t_1 in the highest slot.  Multiplying monomials is then a single
# integer addition (weights never exceed m, so slots cannot carry), and
# integer comparison is exactly lexicographic comparison with t_1 first,
# which is the term order the elimination argument needs.
_SLOT_BITS = 8
_TPoly = dict  # packed exponent int -> coefficient


def _t_mul(a: _TPoly, b: _TPoly) -> _TPoly:
    if len(a) > len(b):
        a, b = b, a
    out: _TPoly = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            c = get(e, 0) + ca * cb
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def _pack(exponents: list[int], k: int) -> int:
    packed = 0
    for i, e in enumerate(exponents):
        packed |= e << (_SLOT_BITS * (k - 1 - i))
    return packed


def _unpack(packed: int, k: int) -> list[int]:
    mask = (1 << _SLOT_BITS) - 1
    return [(packed >> (_SLOT_BITS * (k - 1 - i))) & mask for i in range(k)]


@functools.lru_cache(maxsize=None)
def _elementary(k: int, j: int) -> tuple[tuple[int, int], ...]:
    """e_j(t_1,...,t_k), expanded: the sum of all squarefree degree-j monomials."""
    terms = []
    for combo in combinations(range(k), j):
        e = [0] * k
        for i in combo:
            e[i] = 1
        terms.append((_pack(e, k), 1))
    return tuple(terms)


@functools.lru_cache(maxsize=None)
def _elementary_power(k: int, j: int, d: int) -> tuple[tuple[int, int], ...]:
    """e_j(t_1,...,t_k)^d, expanded and cached (reused across elimination steps)."""
    if d == 1:
        return _elementary(k, j)
    prod = _t_mul(dict(_elementary_power(k, j, d - 1)), dict(_elementary(k, j)))
    return tuple(prod.items())


def brute_force_newton(m: int, k: int) -> GradedPolynomial:
    """Rewrite t_1^m + ... + t_k^m in e_1..e_m by leading-term elimination.

    Independent of k whenever k >= m.  This is the oracle route; it shares no
    code with the Newton recursion.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k < m:
        raise ValueError(f"insufficient variables: need k >= m, got k={k}, m={m}")
    if m >= (1 << _SLOT_BITS):
        raise ValueError(f"m too large for packed exponents (m < {1 << _SLOT_BITS})")
    p: _TPoly = {}
    for i in range(k):
        e = [0] * k
        e[i] = m
        p[_pack(e, k)] = 1

    result: dict[Monomial, int] = {}
    while p:
        lead = max(p)  # lex-leading monomial; its exponent is a partition
        lead_coeff = p[lead]
        lam = _unpack(lead, k)
        if any(lam[i] < lam[i + 1] for i in range(k - 1)):
            raise ValueError("leading exponent not a partition; input not symmetric")
        sigma_exps = {}
        factors = []
        for j in range(1, k + 1):
            d = lam[j - 1] - (lam[j] if j < k else 0)
            if d:
                sigma_exps[f"s{j}"] = d
                factors.append(dict(_elementary_power(k, j, d)))
        factors.sort(key=len)
        subtrahend: _TPoly = {0: 1}
        for factor in factors:
            subtrahend = _t_mul(subtrahend, factor)
        for e, c in subtrahend.items():
            cur = p.get(e, 0) - c * lead_coeff
            if cur:
                p[e] = cur
            elif e in p:
                del p[e]
        sm = SIGMA_RING.monomial(sigma_exps)
        result[sm] = result.get(sm, 0) + lead_coeff

    out = SIGMA_RING.polynomial(result)
    for mono, _ in out.iter_terms():
        for sym, _e in mono.pairs:
            if SIGMA_RING.generator_index(sym) > m:
                raise AssertionError(f"unexpected high elementary {sym} in q_{m}")
    return out


def power_sum_s(m: int) -> GradedPolynomial:
    """s_m = q_m(b_1,...,b_m) in Z[b1,b2,...]; homogeneous of degree 2m."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    q = newton_polynomial(m)
    terms: dict[Monomial, int] = {}
    for mono, coeff in q.iter_terms():
        renamed = BU_HOMOLOGY_RING.monomial(
            {f"b{sym[1:]}": e for sym, e in mono.pairs}
        )
        if BU_HOMOLOGY_RING.monomial_degree(renamed) != SIGMA_RING.monomial_degree(mono):
            raise AssertionError("degree changed under s_j -> b_j renaming")
        terms[renamed] = coeff
    return BU_HOMOLOGY_RING.polynomial(terms)


class TensorPolynomial:
    """An element of Z[b...] (x) Z[b...], stored as {(mono, mono): coeff}.

    Components multiply independently with no sign, which is correct here
    because every degree in play is even.
    """

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: RingSpec, terms):
        self.ring = ring
        self._terms = {mm: int(c) for mm, c in dict(terms).items() if c != 0}

    @classmethod
    def tensor(cls, p: GradedPolynomial, q: GradedPolynomial) -> "TensorPolynomial":
        p.ring._check_compatible(q.ring)
        terms = {}
        for ml, cl in p.iter_terms():
            for mr, cr in q.iter_terms():
                terms[(ml, mr)] = terms.get((ml, mr), 0) + cl * cr
        return cls(p.ring, terms)

    def is_zero(self) -> bool:
        return not self._terms

    def terms_in_order(self):
        key = lambda t: (self.ring.sort_key(t[0][0]), self.ring.sort_key(t[0][1]))
        return sorted(self._terms.items(), key=key)

    def __add__(self, other: "TensorPolynomial") -> "TensorPolynomial":
        self.ring._check_compatible(other.ring)
        out = dict(self._terms)
        for mm, c in other._terms.items():
            out[mm] = out.get(mm, 0) + c
        return TensorPolynomial(self.ring, out)

    def __neg__(self) -> "TensorPolynomial":
        return TensorPolynomial(self.ring, {mm: -c for mm, c in self._terms.items()})

    def __sub__(self, other: "TensorPolynomial") -> "TensorPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "TensorPolynomial":
        if isinstance(other, int):
            return TensorPolynomial(
                self.ring, {mm: c * other for mm, c in self._terms.items()}
            )
        self.ring._check_compatible(other.ring)
        out: dict[tuple[Monomial, Monomial], int] = {}
        for (la, ra), ca in self._terms.items():
            for (lb, rb), cb in other._terms.items():
                mm = (
                    _merge_monomials(self.ring, la, lb),
                    _merge_monomials(self.ring, ra, rb),
                )
                out[mm] = out.get(mm, 0) + ca * cb
        return TensorPolynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TensorPolynomial":
        if n < 0:
            raise ValueError("negative power")
        out = TensorPolynomial.tensor(self.ring.one(), self.ring.one())
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorPolynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring.name, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        chunks = []
        for (ml, mr), c in self.terms_in_order():
            body = f"{ml}(x){mr}"
            mag = abs(c)
            if mag != 1:
                body = f"{mag}*{body}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(chunks)

    __repr__ = __str__


@functools.lru_cache(maxsize=None)
def _coproduct_generator(n: int) -> TensorPolynomial:
    """psi(b_n) = sum_{i+j=n} b_i (x) b_j with b_0 = 1."""
    ring = BU_HOMOLOGY_RING
    terms = {}
    for i in range(n + 1):
        left = ring.monomial({f"b{i}": 1}) if i else Monomial(())
        j = n - i
        right = ring.monomial({f"b{j}": 1}) if j else Monomial(())
        terms[(left, right)] = 1
    return TensorPolynomial(ring, terms)


def coproduct(p: GradedPolynomial) -> TensorPolynomial:
    """The ring-map extension of psi to any polynomial in Z[b1,b2,...]."""
    BU_HOMOLOGY_RING._check_compatible(p.ring)
    ring = p.ring
    acc = TensorPolynomial(ring, {})
    for mono, coeff in p.iter_terms():
        term = TensorPolynomial.tensor(ring.one(), ring.one())
        for sym, exp in mono.pairs:
            term = term * _coproduct_generator(int(sym[1:])) ** exp
        acc = acc + term * coeff
    return acc
