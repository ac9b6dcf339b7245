"""Rank tables, the level-n lifting-set factors, and divisibility verdicts.

For an even target R (homotopy concentrated in even degrees, no odd groups)
the set of level-n structured lifts of a multiplicative map out of complex
cobordism splits degreewise; the k-th factor is the cohomology of the n-fold
delooping of BU in degree n+2k with coefficients pi_{2k} R.  For n = 2 that
delooping is BSU and for n = 4 it is the 5-connected cover BU6; both have
free, evenly concentrated cohomology, so every factor is a plain tensor
product of a free group with the coefficient group and all ranks multiply.

A map of ring spectra out of complex cobordism is pinned down by a coordinate
x + a_1 x^2 + a_2 x^3 + ... with a_m living in pi_{2m} R.  The degree-shifted
restriction from the delooping to BU(1) hits the generator in degree 2m with
some index d = restriction_index(n, m); if the leading nonzero a_m is not
divisible by d, no level-n lift exists.  Because the identification of the
coordinate entries through the lifting tower is only valid up to filtration,
a definite verdict is issued ONLY at the leading nonzero degree; all later
degrees report "indeterminate".  At n = 2 the index is always 1 and nothing
is ever obstructed.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .rings import poincare_rank
from .spaces import (
    SpacePresentation,
    bsu_restriction_coefficient,
    bu6_generator_image,
    space_model,
)


class UnsupportedSystemError(ValueError):
    """A well-formed request the calculus cannot answer (torsion / odd groups)."""


VERDICT_UNOBSTRUCTED = "unobstructed"
VERDICT_OBSTRUCTED = "obstructed"
VERDICT_INDETERMINATE = "indeterminate"


# -- partition counting -------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _count_partitions(n: int, max_part: int) -> int:
    if n == 0:
        return 1
    if max_part == 0:
        return 0
    if max_part > n:
        max_part = n
    return _count_partitions(n - max_part, max_part) + _count_partitions(n, max_part - 1)


def partition_count(k: int) -> int:
    """p(k), the number of partitions of k (p(0) = 1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return _count_partitions(k, k)


# -- coefficient systems -------------------------------------------------------


Group = tuple[int, tuple[int, ...]]  # (free rank, cyclic torsion orders)

ZERO_GROUP: Group = (0, ())


class GradedCoefficients:
    """Per-degree finitely generated abelian groups (rank + torsion orders).

    Degrees not carrying a group are zero.  `even` and `torsion_free` are
    known at construction: computed for explicit tables, declared for the
    rule-based builtins (which satisfy them by construction).
    """

    def __init__(
        self,
        name: str,
        group_of: Callable[[int], Group],
        even: bool,
        torsion_free: bool,
    ):
        self.name = name
        self._group_of = group_of
        self.even = even
        self.torsion_free = torsion_free

    def __repr__(self) -> str:
        return f"GradedCoefficients({self.name!r})"

    def group(self, q: int) -> Group:
        if q < 0:
            return ZERO_GROUP
        rank, torsion = self._group_of(q)
        return (rank, tuple(torsion))

    def rank(self, q: int) -> int:
        return self.group(q)[0]

    def torsion(self, q: int) -> tuple[int, ...]:
        return self.group(q)[1]

    @classmethod
    def from_table(cls, name: str, table: Mapping[int, Group]) -> "GradedCoefficients":
        groups: dict[int, Group] = {}
        for q, (rank, torsion) in table.items():
            if q < 0:
                raise ValueError(f"negative degree {q}")
            if rank < 0:
                raise ValueError(f"negative rank at degree {q}")
            torsion = tuple(sorted(int(t) for t in torsion))
            if any(t < 2 for t in torsion):
                raise ValueError(f"torsion orders must be >= 2 (degree {q})")
            if rank or torsion:
                groups[q] = (int(rank), torsion)
        even = all(q % 2 == 0 for q in groups)
        torsion_free = all(not t for _, t in groups.values())
        return cls(name, lambda q: groups.get(q, ZERO_GROUP), even, torsion_free)


def _mu_group(q: int) -> Group:
    if q % 2 != 0:
        return ZERO_GROUP
    return (partition_count(q // 2), ())


def _sl1mu_group(q: int) -> Group:
    if q == 0:
        return ZERO_GROUP
    return _mu_group(q)


_Z_SHIFT_RE = re.compile(r"^Z_even_shift\((\d+)\)$")

BUILTIN_COEFFICIENT_NAMES = ("MU", "sl1MU", "Z_even_shift(d)")


def builtin_coefficients(name: str) -> GradedCoefficients:
    """The builtin systems: MU, sl1MU, or a single Z placed in one degree.

    MU has rank p(k) in degree 2k and nothing odd; sl1MU is the same with the
    degree-0 group removed; Z_even_shift(d) is one Z in degree d (a
    single-stage layer for Postnikov experiments).
    """
    if name == "MU":
        return GradedCoefficients("MU", _mu_group, even=True, torsion_free=True)
    if name == "sl1MU":
        return GradedCoefficients("sl1MU", _sl1mu_group, even=True, torsion_free=True)
    match = _Z_SHIFT_RE.match(name)
    if match:
        d = int(match.group(1))
        return GradedCoefficients(
            name,
            lambda q: (1, ()) if q == d else ZERO_GROUP,
            even=(d % 2 == 0),
            torsion_free=True,
        )
    raise ValueError(
        f"unknown coefficient system {name!r}; builtins are {BUILTIN_COEFFICIENT_NAMES}"
    )


def parse_coefficients_text(text: str) -> GradedCoefficients:
    """Parse the coefficient-system file format.

    One `name <identifier>` header line, then one record per degree:
    `degree rank [torsion orders...]`.  Blank lines and `#` comments allowed.
    """
    name = None
    table: dict[int, Group] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if name is None:
            if fields[0] != "name" or len(fields) != 2:
                raise ValueError(
                    f"line {lineno}: expected header 'name <identifier>', got {raw!r}"
                )
            name = fields[1]
            continue
        try:
            numbers = [int(f) for f in fields]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from None
        if len(numbers) < 2:
            raise ValueError(f"line {lineno}: expected 'degree rank [torsion...]'")
        q, rank, torsion = numbers[0], numbers[1], numbers[2:]
        if q in table:
            raise ValueError(f"line {lineno}: duplicate degree {q}")
        table[q] = (rank, tuple(torsion))
    if name is None:
        raise ValueError("missing 'name' header line")
    return GradedCoefficients.from_table(name, table)


# -- rank tables ---------------------------------------------------------------


def space_for_level(n: int) -> SpacePresentation:
    """The delooping model: BSU at level 2, BU6 at level 4."""
    if n == 2:
        return space_model("H_BSU")
    if n == 4:
        return space_model("H_BU6")
    raise ValueError(f"level n must be 2 or 4, got {n}")


def e2_entry(n: int, s: int, q: int, coeffs: GradedCoefficients) -> Group:
    """The group H^s(model(n); coeffs at q) as (rank, torsion orders).

    The model cohomology is degreewise free and even, so universal
    coefficients are trivial: the rank multiplies and each torsion order is
    replicated once per cohomology generator.  Odd s gives the zero group.
    """
    if s < 0 or q < 0:
        raise ValueError("s and q must be >= 0")
    model = space_for_level(n)
    h_rank = poincare_rank(model.ring, s)
    if h_rank == 0:
        return ZERO_GROUP
    rank_q, torsion_q = coeffs.group(q)
    return (h_rank * rank_q, tuple(sorted(torsion_q * h_rank)))


def pi0_factors(
    n: int, coeffs: GradedCoefficients, max_degree: int
) -> list[tuple[int, Group]]:
    """Degreewise factors of the level-n lifting set, for even targets only.

    Factor k is the group in cohomological degree n+2k with coefficients in
    degree 2k, for 1 <= k <= max_degree/2.  Reported as a list of groups; the
    product carries no further structure, so none is imposed.
    """
    space_for_level(n)  # validates n
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    if max_degree % 2 != 0:
        raise ValueError("max_degree must be even")
    if not coeffs.even:
        raise UnsupportedSystemError(
            f"target not even: {coeffs.name!r} has a nonzero odd-degree group"
        )
    return [(k, e2_entry(n, n + 2 * k, 2 * k, coeffs)) for k in range(1, max_degree // 2 + 1)]


def restriction_index(n: int, m: int) -> int:
    """Index of the image of the degree-shifted restriction on indecomposables.

    Level 2 recomputes through the symmetric-function engine (the coefficient
    is always a unit); level 4 uses the generator image of the 5-connected
    cover.  Decomposables contribute nothing, so the image in degree 2m of
    H^*(BU1) = Z{x^m} is generated by the generator's coefficient.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n == 2:
        return abs(bsu_restriction_coefficient(m))
    if n == 4:
        return abs(bu6_generator_image(m).coefficient)
    raise ValueError(f"level n must be 2 or 4, got {n}")


# -- coordinates and verdicts ----------------------------------------------------


class Coordinate:
    """A coordinate x + a_1 x^2 + a_2 x^3 + ... truncated at degree `truncation`.

    Entry a_m is an integer tuple in a chosen ordered basis of the coefficient
    group in degree 2m (basis choice is caller metadata; divisibility is read
    componentwise).  Degrees <= truncation missing from `entries` are zero;
    degrees beyond the truncation are unspecified, not zero.
    """

    def __init__(
        self,
        coefficients: GradedCoefficients,
        entries: Mapping[int, Sequence[int]],
        truncation: int | None = None,
    ):
        if not coefficients.torsion_free:
            raise UnsupportedSystemError(
                f"coordinate entries require a torsion-free system, got {coefficients.name!r}"
            )
        if truncation is None:
            truncation = max(entries, default=0)
        if truncation < 0:
            raise ValueError("truncation must be >= 0")
        filled: dict[int, tuple[int, ...]] = {}
        for m in entries:
            if m < 1:
                raise ValueError(f"coordinate degrees start at 1, got {m}")
            if m > truncation:
                raise ValueError(f"entry degree {m} exceeds truncation {truncation}")
        for m in range(1, truncation + 1):
            expect = coefficients.rank(2 * m)
            a_m = tuple(int(v) for v in entries.get(m, (0,) * expect))
            if len(a_m) != expect:
                raise ValueError(
                    f"a_{m} has {len(a_m)} components, expected rank {expect} "
                    f"of {coefficients.name!r} in degree {2 * m}"
                )
            filled[m] = a_m
        self.coefficients = coefficients
        self.entries = filled
        self.truncation = truncation

    def leading_degree(self) -> int | None:
        """Smallest m with a_m nonzero, or None for the identity coordinate."""
        for m in range(1, self.truncation + 1):
            if any(self.entries[m]):
                return m
        return None

    def scaled(self, factor: int) -> "Coordinate":
        return Coordinate(
            self.coefficients,
            {m: tuple(v * factor for v in a) for m, a in self.entries.items()},
            self.truncation,
        )


def parse_coordinate_text(coefficients: GradedCoefficients, text: str) -> Coordinate:
    """Parse the coordinate file format: one record `m v1 v2 ... v_rank` per m."""
    entries: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            numbers = [int(f) for f in line.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from None
        if not numbers:
            continue
        m, values = numbers[0], tuple(numbers[1:])
        if m in entries:
            raise ValueError(f"line {lineno}: duplicate degree {m}")
        entries[m] = values
    return Coordinate(coefficients, entries)


@dataclass(frozen=True)
class ObstructionRecord:
    m: int
    index: int
    verdict: str
    note: str


@dataclass(frozen=True)
class ObstructionReport:
    n: int
    records: tuple[ObstructionRecord, ...]

    def verdict_at(self, m: int) -> str | None:
        for rec in self.records:
            if rec.m == m:
                return rec.verdict
        return None

    def has_obstruction(self) -> bool:
        return any(r.verdict == VERDICT_OBSTRUCTED for r in self.records)


_FILTRATION_NOTE = (
    "beyond the leading nonzero coefficient the identification of entries is "
    "only valid up to filtration; no verdict is claimed"
)


def coordinate_obstruction(coord: Coordinate, n: int) -> ObstructionReport:
    """Divisibility verdicts for lifting the coordinate to a level-n structure.

    Only the leading nonzero entry supports a definite verdict (filtration
    caveat); later entries are indeterminate.  At level 2 every index is 1,
    so every degree is unobstructed at leading order.
    """
    space_for_level(n)  # validates n
    if not coord.coefficients.torsion_free:
        raise UnsupportedSystemError("coordinate system carries torsion; unsupported")
    if not coord.coefficients.even:
        raise UnsupportedSystemError(
            f"target not even: {coord.coefficients.name!r} has a nonzero odd-degree group"
        )
    leading = coord.leading_degree()
    if leading is None:
        return ObstructionReport(n, ())

    records: list[ObstructionRecord] = []
    if n == 2:
        for m in range(1, coord.truncation + 1):
            records.append(
                ObstructionRecord(
                    m,
                    restriction_index(2, m),
                    VERDICT_UNOBSTRUCTED,
                    "index 1 imposes no divisibility condition at this level",
                )
            )
        return ObstructionReport(n, tuple(records))

    d = restriction_index(n, leading)
    a = coord.entries[leading]
    if all(v % d == 0 for v in a):
        records.append(
            ObstructionRecord(
                leading,
                d,
                VERDICT_UNOBSTRUCTED,
                f"every component of a_{leading} is divisible by the index {d}; "
                "unobstructed at leading order (higher corrections are only "
                "identified up to filtration)",
            )
        )
    else:
        records.append(
            ObstructionRecord(
                leading,
                d,
                VERDICT_OBSTRUCTED,
                f"a_{leading} has a component not divisible by the index {d}; "
                f"no level-{n} lift exists",
            )
        )
    for m in range(leading + 1, coord.truncation + 1):
        records.append(
            ObstructionRecord(m, restriction_index(n, m), VERDICT_INDETERMINATE, _FILTRATION_NOTE)
        )
    return ObstructionReport(n, tuple(records))


def format_group(group: Group) -> str:
    """Plain-text abelian group: 0, Z, Z^2, Z + Z/2 + Z/4, ..."""
    rank, torsion = group
    parts: list[str] = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append(f"Z^{rank}")
    parts.extend(f"Z/{t}" for t in torsion)
    return " + ".join(parts) if parts else "0"
