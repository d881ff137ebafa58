"""Noncommutative polynomials in a_0..a_d and the symbol/restitution map.

Words are tuples of letter indices (0-based, length m); coefficients are
exact Fractions.  The letter order a_d > a_(d-1) > ... > a_0 makes the
lexicographically greatest word of a polynomial its leading term, which is
how linear independence of the noncrossing basis is certified: the leading
word of the restitution of a noncrossing pairing counts, interval by
interval, the chords leaving that interval to the right, and distinct
noncrossing pairings give distinct counts.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .brackets import BracketExpression, BracketMonomial, _total_crossings
from .partitions import _iter_nc_matchings


class NcPolynomial:
    """A homogeneous noncommutative polynomial: words of length m over
    letters 0..d with Fraction coefficients; zero coefficients dropped."""

    __slots__ = ("d", "m", "terms")

    def __init__(self, d: int, m: int, terms=None):
        if d < 0 or m < 0:
            raise ValueError("d and m must be nonnegative")
        self.d = d
        self.m = m
        clean: dict[tuple[int, ...], Fraction] = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if len(word) != m:
                raise ValueError(f"word {word} has length != {m}")
            if any(not 0 <= k <= d for k in word):
                raise ValueError(f"letter out of range 0..{d} in {word}")
            c = Fraction(coeff)
            if c:
                clean[word] = c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NcPolynomial):
            return NotImplemented
        return (self.d, self.m) == (other.d, other.m) and self.terms == other.terms

    def __add__(self, other: "NcPolynomial") -> "NcPolynomial":
        if (self.d, self.m) != (other.d, other.m):
            raise ValueError("mismatched degree or word length")
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, Fraction(0)) + coeff
        return NcPolynomial(self.d, self.m, terms)

    def __sub__(self, other: "NcPolynomial") -> "NcPolynomial":
        return self + (-1) * other

    def __mul__(self, scalar) -> "NcPolynomial":
        c = Fraction(scalar)
        return NcPolynomial(self.d, self.m, {w: c * v for w, v in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"NcPolynomial(d={self.d}, m={self.m}, {self.pretty()!r})"

    def coefficient(self, word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def pretty(self) -> str:
        """Human-readable form, leading term first, e.g. 'a1·a0 - a0·a1'."""
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, reverse=True):
            coeff = self.terms[word]
            monom = "·".join(f"a{k}" for k in word) if word else "1"
            mag = -coeff if coeff < 0 else coeff
            body = monom if mag == 1 and word else f"{mag}·{monom}" if word else f"{mag}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "terms": [
                {"word": list(word), "coeff": str(self.terms[word])}
                for word in sorted(self.terms, reverse=True)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "NcPolynomial":
        return cls(
            int(data["d"]),
            int(data["m"]),
            {tuple(t["word"]): Fraction(t["coeff"]) for t in data["terms"]},
        )


def restitution(b) -> NcPolynomial:
    """The noncommutative polynomial whose symbol is the bracket product b.

    Expands prod over chords {p,q} of (eta_{i(p),1} eta_{i(q),2} -
    eta_{i(p),2} eta_{i(q),1}); a term with eta_1-exponents (s_1,...,s_m)
    contributes its sign to the word (s_1,...,s_m).  Linear over
    BracketExpression inputs.
    """
    if isinstance(b, BracketExpression):
        out = NcPolynomial(b.d, b.m, {})
        for mono, coeff in b.monomials():
            out = out + coeff * restitution(mono)
        return out
    profiles: dict[tuple[int, ...], Fraction] = {(0,) * b.m: Fraction(b.sign)}
    for p, q in b.chords:
        ip, iq = b.interval(p), b.interval(q)
        nxt: dict[tuple[int, ...], Fraction] = {}
        for prof, coeff in profiles.items():
            plus = prof[:ip] + (prof[ip] + 1,) + prof[ip + 1:]
            nxt[plus] = nxt.get(plus, Fraction(0)) + coeff
            minus = prof[:iq] + (prof[iq] + 1,) + prof[iq + 1:]
            nxt[minus] = nxt.get(minus, Fraction(0)) - coeff
        profiles = nxt
    return NcPolynomial(b.d, b.m, profiles)


def leading_term(poly: NcPolynomial) -> tuple[int, ...]:
    """The lexicographically greatest word with nonzero coefficient
    (letters ordered a_d > a_(d-1) > ... > a_0)."""
    if not poly.terms:
        raise ValueError("zero polynomial has no leading term")
    return max(poly.terms)


def predicted_leading_word(b: BracketMonomial) -> tuple[int, ...]:
    """For a noncrossing monomial, the word whose k-th letter counts the
    chords leaving interval k to a strictly later interval."""
    if _total_crossings(b.chords):
        raise ValueError("leading word prediction needs a noncrossing monomial")
    counts = [0] * b.m
    for p, _q in b.chords:
        counts[b.interval(p)] += 1
    return tuple(counts)


def noncrossing_basis(m: int, d: int) -> list[NcPolynomial]:
    """Restitutions of all m-partite noncrossing pairings (canonical
    orientation, sign +1); pairwise distinct leading words make them a basis
    of the invariant m-linear forms.  Empty when m*d is odd."""
    return [
        restitution(BracketMonomial(m, d, chords, 1))
        for chords in sorted(_iter_nc_matchings(m * d, max(d, 1)))
    ]


def polarize(f_hom, d: int, vectors) -> Fraction:
    """The symmetric multilinear form of a d-homogeneous map, evaluated at
    ``vectors``: (1/d!) sum over I of (-1)^(d-|I|) f_hom(sum of v_i, i in I).

    Normalised so that polarize(f, d, [v]*d) == f_hom(v).
    """
    vectors = [tuple(v) for v in vectors]
    if len(vectors) != d:
        raise ValueError(f"expected {d} argument vectors, got {len(vectors)}")
    if d == 0:
        return Fraction(f_hom(()))
    dim = len(vectors[0])
    total = Fraction(0)
    for mask in range(1 << d):
        vec = [Fraction(0)] * dim
        bits = 0
        for i in range(d):
            if mask >> i & 1:
                bits += 1
                for j in range(dim):
                    vec[j] += Fraction(vectors[i][j])
        term = Fraction(f_hom(tuple(vec)))
        total += term if (d - bits) % 2 == 0 else -term
    return total / factorial(d)
