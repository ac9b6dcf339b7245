"""Presentations of BU-family (co)homology and the Bott-map calculus.

The five space models in play:

    H_BU_homology    Z[b1, b2, ...]    deg b_m = 2m   (monomial generators)
    H_BU_cohomology  Z[c1, c2, ...]    deg c_m = 2m   (Chern classes)
    H_BU1            Z[x]              deg x = 2
    H_BSU            Z[c2, c3, ...]    (the quotient-by-c1 presentation)
    H_BU6            Z[y3, y4, ...]    deg y_k = 2k   (generators in 6, 8, 10, ...)

The double-suspension self map of BU acts on homology by killing every
decomposable and sending b_m to (-1)^m s_{m+1}; applied twice it sends b_m to
(-1)^(m+1) (m+1) s_{m+2}.  Pairing against the Chern class c_n (which is
Kronecker-dual to b_1^n) turns those pushforwards into the integer
coefficients by which the degree-shifting restriction maps

    H^{2m+2}(BSU)  -> H^{2m}(BU1)        c_{m+1} |-> (-1)^m x^m
    H^{2m+4}(BU6)  -> H^{2m}(BU1)        y_{m+2} |-> see bu6_generator_image

hit the generator x^m.  Everything below degree-checks at every call; the
coefficient routines recompute through the symmetric-function engine rather
than hard-coding the closed forms (except bu6_generator_image, whose
prime-power branch is only pinned down by a divisibility statement and is
cross-checked against the engine in the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .rings import GeneratorScheme, GradedPolynomial, RingSpec
from .symmetric import BU_HOMOLOGY_RING, power_sum_s

BU_COHOMOLOGY_RING = RingSpec(
    "bu_cohomology", scheme=GeneratorScheme("c", 1, lambda i: 2 * i)
)
BSU_RING = RingSpec("bsu_cohomology", scheme=GeneratorScheme("c", 2, lambda i: 2 * i))
BU1_RING = RingSpec("bu1_cohomology", generators=[("x", 2)])
BU6_RING = RingSpec("bu6_cohomology", scheme=GeneratorScheme("y", 3, lambda i: 2 * i))


@dataclass(frozen=True)
class SpacePresentation:
    """A named free graded-commutative (co)homology presentation."""

    name: str
    ring: RingSpec
    variance: str  # "homology" or "cohomology"


_SPACE_MODELS = {
    "H_BU_homology": SpacePresentation("H_BU_homology", BU_HOMOLOGY_RING, "homology"),
    "H_BU_cohomology": SpacePresentation("H_BU_cohomology", BU_COHOMOLOGY_RING, "cohomology"),
    "H_BU1": SpacePresentation("H_BU1", BU1_RING, "cohomology"),
    "H_BSU": SpacePresentation("H_BSU", BSU_RING, "cohomology"),
    "H_BU6": SpacePresentation("H_BU6", BU6_RING, "cohomology"),
}

SPACE_NAMES = tuple(_SPACE_MODELS)


def space_model(name: str) -> SpacePresentation:
    try:
        return _SPACE_MODELS[name]
    except KeyError:
        raise ValueError(f"unknown space model {name!r}; expected one of {SPACE_NAMES}") from None


@dataclass(frozen=True)
class GeneratorMap:
    """A degree-shifting map given on generators, zero on decomposables.

    Not a ring map: it is linear over generators and sends any product of two
    positive-degree elements (and any constant) to zero, i.e. a map of
    indecomposable quotients.  `shift` is even and nonnegative; pushforward
    maps raise degree by shift, pullback maps lower it.
    """

    name: str
    source: SpacePresentation
    target: SpacePresentation
    shift: int
    orientation: str  # "pushforward" or "pullback"
    image_of: Callable[[str], GradedPolynomial]
    kills_decomposables: bool = True

    @property
    def degree_delta(self) -> int:
        return self.shift if self.orientation == "pushforward" else -self.shift

    def apply(self, p: GradedPolynomial) -> GradedPolynomial:
        self.source.ring._check_compatible(p.ring)
        if not p.is_homogeneous():
            raise ValueError(f"{self.name} requires homogeneous input")
        out = self.target.ring.zero()
        for mono, coeff in p.iter_terms():
            sym = mono.single_generator()
            if sym is None:
                continue  # decomposable or constant: dies
            image = self.image_of(sym)
            expected = self.source.ring.generator_degree(sym) + self.degree_delta
            if (not image.is_zero()) and image.degree() != expected:
                raise AssertionError(
                    f"{self.name}: image of {sym} has degree {image.degree()}, "
                    f"expected {expected}"
                )
            out = out + coeff * image
        return out


def _bott_image(sym: str) -> GradedPolynomial:
    m = int(sym[1:])
    return (-1) ** m * power_sum_s(m + 1)


def _bott_image_twice(sym: str) -> GradedPolynomial:
    m = int(sym[1:])
    return (-1) ** (m + 1) * (m + 1) * power_sum_s(m + 2)


#: Single suspension step on H_*(BU): b_m -> (-1)^m s_{m+1}, decomposables -> 0.
BOTT_PUSHFORWARD = GeneratorMap(
    name="bott_pushforward",
    source=_SPACE_MODELS["H_BU_homology"],
    target=_SPACE_MODELS["H_BU_homology"],
    shift=2,
    orientation="pushforward",
    image_of=_bott_image,
)

#: Double step: b_m -> (-1)^(m+1) (m+1) s_{m+2}.
BOTT_PUSHFORWARD_SQUARED = GeneratorMap(
    name="bott_pushforward_squared",
    source=_SPACE_MODELS["H_BU_homology"],
    target=_SPACE_MODELS["H_BU_homology"],
    shift=4,
    orientation="pushforward",
    image_of=_bott_image_twice,
)


def bott_pushforward(p: GradedPolynomial, iterate: int) -> GradedPolynomial:
    """Apply the suspension map `iterate` times (iterate is 1 or 2)."""
    if iterate == 1:
        return BOTT_PUSHFORWARD.apply(p)
    if iterate == 2:
        return BOTT_PUSHFORWARD_SQUARED.apply(p)
    raise ValueError(f"iterate must be 1 or 2, got {iterate}")


def indecomposable_part(p: GradedPolynomial) -> GradedPolynomial:
    """Project to the span of single generators (kill constants and products)."""
    return GradedPolynomial(
        p.ring,
        {m: c for m, c in p.iter_terms() if m.single_generator() is not None},
    )


def pair_with_chern(n: int, p: GradedPolynomial) -> int:
    """Kronecker pairing <c_n, p>: the coefficient of b_1^n in p.

    Vanishes automatically on any term of degree != 2n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    BU_HOMOLOGY_RING._check_compatible(p.ring)
    return p.coefficient(p.ring.monomial({"b1": n}))


def bsu_restriction_coefficient(m: int) -> int:
    """Coefficient of x^m in the image of c_{m+1} under H^{2m+2}(BSU) -> H^{2m}(BU1).

    Recomputed through the engine (pairing after pushforward); equals (-1)^m.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    bm = BU_HOMOLOGY_RING.gen(f"b{m}")
    return pair_with_chern(m + 1, bott_pushforward(bm, 1))


def bu_restriction_coefficient_4(m: int) -> int:
    """Coefficient of x^m in the image of c_{m+2} under H^{2m+4}(BU) -> H^{2m}(BU1).

    Engine path through the double suspension; equals (-1)^(m+1) (m+1).
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    bm = BU_HOMOLOGY_RING.gen(f"b{m}")
    return pair_with_chern(m + 2, bott_pushforward(bm, 2))


def prime_power_root(n: int) -> tuple[int, int] | None:
    """(p, t) with n = p^t if n >= 2 is a prime power, else None.

    Trial division; inputs are small, determinism beats speed.
    """
    if n < 2:
        return None
    p = None
    rest = n
    for d in range(2, n + 1):
        if d * d > rest:
            break
        if rest % d == 0:
            p = d
            while rest % d == 0:
                rest //= d
            break
    if p is None:
        return (n, 1)  # n itself prime
    if rest != 1:
        return None  # a second prime divides n
    t = 0
    while n > 1:
        n //= p
        t += 1
    return (p, t)


class Bu6Image(NamedTuple):
    coefficient: int
    power: int


def bu6_generator_image(m: int) -> Bu6Image:
    """Image of the degree-(2m+4) generator y_{m+2} in H^{2m}(BU1), as (coeff, power).

    When m+1 = p^t the generator only reaches 1/p of the image of c_{m+2}
    (the Chern class is p times a generator there), so the coefficient drops
    to (-1)^(m+1) (m+1)/p; otherwise it is (-1)^(m+1) (m+1).  Signs follow
    the image of c_{m+2} in both branches.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = m + 1
    sign = 1 if n % 2 == 0 else -1
    pp = prime_power_root(n)
    if pp is not None:
        p, _t = pp
        return Bu6Image(sign * (n // p), m)
    return Bu6Image(sign * n, m)


def bsu_to_bu1_map() -> GeneratorMap:
    """The induced map H^{*+2}(BSU) -> H^*(BU1) with engine-computed images."""

    def image(sym: str) -> GradedPolynomial:
        m = int(sym[1:]) - 1  # c_{m+1}
        return BU1_RING.gen("x", exp=m, coeff=bsu_restriction_coefficient(m))

    return GeneratorMap(
        name="bsu_to_bu1",
        source=_SPACE_MODELS["H_BSU"],
        target=_SPACE_MODELS["H_BU1"],
        shift=2,
        orientation="pullback",
        image_of=image,
    )


def bu6_to_bu1_map() -> GeneratorMap:
    """The induced map H^{*+4}(BU6) -> H^*(BU1) on generators."""

    def image(sym: str) -> GradedPolynomial:
        m = int(sym[1:]) - 2  # y_{m+2}
        coeff, power = bu6_generator_image(m)
        return BU1_RING.gen("x", exp=power, coeff=coeff)

    return GeneratorMap(
        name="bu6_to_bu1",
        source=_SPACE_MODELS["H_BU6"],
        target=_SPACE_MODELS["H_BU1"],
        shift=4,
        orientation="pullback",
        image_of=image,
    )
