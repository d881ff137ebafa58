"""Free cumulants, moment-cumulant inversion over NC(n), and the
combinatorial moments of free stochastic measures.

Moments and cumulants are exact rationals.  All sums over NC(n) are explicit
enumerations; the interval ("at most one element per group") constraint in
``psi_mixed_moment`` is pruned inside the search rather than filtered after.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import IntervalPartition, SetPartition, _iter_nc_blocks


@dataclass(frozen=True)
class MomentSequence:
    """Moments m_0, m_1, ..., with m_0 = 1."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(Fraction(v) for v in self.values)
        if not values or values[0] != 1:
            raise ValueError("a moment sequence starts with m_0 = 1")
        object.__setattr__(self, "values", values)

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]


@dataclass(frozen=True)
class CumulantSequence:
    """Free cumulants c_1, c_2, ..., either rule-generated or tabulated.

    Rules: "semicircle" (c_2 = 1, rest 0), "free-poisson" (all c_k = 1), or
    "table" with explicit rationals (zero beyond the table).
    """

    kind: str
    table: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("semicircle", "free-poisson", "table"):
            raise ValueError(f"unknown cumulant rule {self.kind!r}")
        object.__setattr__(self, "table", tuple(Fraction(v) for v in self.table))

    @classmethod
    def semicircle(cls) -> "CumulantSequence":
        return cls("semicircle")

    @classmethod
    def free_poisson(cls) -> "CumulantSequence":
        return cls("free-poisson")

    @classmethod
    def from_table(cls, values) -> "CumulantSequence":
        return cls("table", tuple(values))

    @classmethod
    def parse(cls, text: str) -> "CumulantSequence":
        """Parse a CLI rule name: semicircle | free-poisson | table:[1,1/2,...]."""
        text = text.strip()
        if text == "semicircle":
            return cls.semicircle()
        if text == "free-poisson":
            return cls.free_poisson()
        if text.startswith("table:"):
            body = text[len("table:"):].strip()
            if body.startswith("[") and body.endswith("]"):
                body = body[1:-1]
            entries = [s for s in (part.strip() for part in body.split(",")) if s]
            return cls.from_table(Fraction(s) for s in entries)
        raise ValueError(f"unknown cumulant rule {text!r}")

    def __getitem__(self, k: int) -> Fraction:
        if k < 1:
            raise ValueError("cumulants are indexed from 1")
        if self.kind == "semicircle":
            return Fraction(1) if k == 2 else Fraction(0)
        if self.kind == "free-poisson":
            return Fraction(1)
        return self.table[k - 1] if k <= len(self.table) else Fraction(0)


def _cumulant_product(blocks, c: CumulantSequence) -> Fraction:
    out = Fraction(1)
    for block in blocks:
        factor = c[len(block)]
        if not factor:
            return Fraction(0)
        out *= factor
    return out


def moments_from_cumulants(c: CumulantSequence, n: int) -> MomentSequence:
    """m_k = sum over sigma in NC(k) of prod over blocks of c_|B|, k <= n."""
    values = [Fraction(1)]
    for k in range(1, n + 1):
        total = Fraction(0)
        for blocks in _iter_nc_blocks(1, k):
            total += _cumulant_product(blocks, c)
        values.append(total)
    return MomentSequence(tuple(values))


def cumulants_from_moments(m: MomentSequence, n: int) -> CumulantSequence:
    """Moebius inversion of the moment-cumulant relation up to order n,
    solved triangularly: c_k = m_k - sum over non-maximal sigma in NC(k)."""
    if m.order < n:
        raise ValueError(f"need moments up to order {n}")
    cums: list[Fraction] = []
    partial = CumulantSequence.from_table(())
    for k in range(1, n + 1):
        rest = Fraction(0)
        for blocks in _iter_nc_blocks(1, k):
            if len(blocks) == 1:
                continue
            rest += _cumulant_product(blocks, partial)
        cums.append(m[k] - rest)
        partial = CumulantSequence.from_table(cums)
    return partial


def partitioned_moment(pi: SetPartition, m: MomentSequence) -> Fraction:
    """prod over blocks B of pi of m_|B| (one identically distributed
    variable in every slot)."""
    out = Fraction(1)
    for block in pi.blocks:
        out *= m[len(block)]
    return out


def psi_mixed_moment(k, c: CumulantSequence) -> Fraction:
    """Joint moment of stochastic measures psi_{k_1} ... psi_{k_m}:

    the sum over sigma in NC(k_1+...+k_m) whose meet with the interval
    partition of the k_i is discrete, of prod over blocks of c_|B|.
    """
    sizes = tuple(int(v) for v in k)
    if any(v <= 0 for v in sizes):
        raise ValueError("group sizes must be positive")
    if not sizes:
        return Fraction(1)
    interval_of = IntervalPartition(sizes).interval_of
    total = Fraction(0)
    for blocks in _iter_nc_blocks(1, sum(sizes), interval_of):
        total += _cumulant_product(blocks, c)
    return total


def psi_orthogonality(m: int, n: int, c: CumulantSequence) -> Fraction:
    """psi_mixed_moment((m, n), c) for a centered variable; equals
    delta_{mn} c_2^n."""
    if c[1] != 0:
        raise ValueError("orthogonality needs a centered variable (c_1 = 0)")
    return psi_mixed_moment((m, n), c)
