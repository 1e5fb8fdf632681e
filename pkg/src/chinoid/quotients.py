"""Target monoids of the branch homomorphisms and their evaluation.

A branch of the diagram tree determines a homomorphism

    kappa(d): C_n -> Cbar_n^{u,v} x (B x Z)^k x Z^l

where B = <p, q : qp = 1> is the bicyclic monoid, Z is infinite cyclic on g,
and Cbar_n^{u,v} is the Chinese monoid on the generators outside u..v with
each of the two outside blocks made commutative.  Each step of the branch
contributes one factor: an arc contributes a (B x Z) pair, a dot a single Z.
Factors are stored in construction order (the first level first).

Branches are duck typed: anything with an ``n`` attribute and a ``steps``
sequence of objects carrying ``kind`` ("arc" or "dot"), ``low`` and ``high``
works, which keeps this module independent of the tree code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import (
    Word, check_word, chinese_rewrites, closure, format_word, parse_word,
)


@dataclass(frozen=True)
class BicyclicElement:
    """The element p^a q^b of the bicyclic monoid."""

    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("bicyclic exponents must be nonnegative")

    def __mul__(self, other: "BicyclicElement") -> "BicyclicElement":
        return bicyclic_mul(self, other)


P = BicyclicElement(1, 0)
Q = BicyclicElement(0, 1)
BICYCLIC_ONE = BicyclicElement(0, 0)


def bicyclic_mul(x: BicyclicElement, y: BicyclicElement) -> BicyclicElement:
    # q^{x.b} p^{y.a} cancels min(x.b, y.a) copies of qp
    m = max(x.b, y.a)
    return BicyclicElement(x.a - x.b + m, y.b - y.a + m)


def bicyclic_reduce(letters: str) -> BicyclicElement:
    """Reduce a string over {p, q} by deleting ``qp`` until none is left."""
    if set(letters) - {"p", "q"}:
        raise ValueError(f"not a word over p, q: {letters!r}")
    s = letters
    while "qp" in s:
        s = s.replace("qp", "")
    return BicyclicElement(s.count("p"), s.count("q"))


@dataclass(frozen=True)
class CyclicElement:
    """g^e in the infinite cyclic group."""

    e: int = 0

    def __mul__(self, other: "CyclicElement") -> "CyclicElement":
        return CyclicElement(self.e + other.e)

    def inverse(self) -> "CyclicElement":
        return CyclicElement(-self.e)


G = CyclicElement(1)
CYCLIC_ONE = CyclicElement(0)


# -- Cbar_n^{u,v} -------------------------------------------------------


@dataclass(frozen=True)
class QuotientWord:
    """A word in Cbar_n^{u,v}.

    ``u`` and ``v`` bound the used generators.  Letters below u commute with
    each other, letters above v commute with each other.  With ``u = v =
    None`` there is no commutation and the word lives in C_n itself (the
    root of the tree).
    """

    n: int
    u: int | None
    v: int | None
    letters: Word = ()

    def __post_init__(self):
        check_word(self.letters, self.n)
        if (self.u is None) != (self.v is None):
            raise ValueError("u and v must both be given or both be None")
        if self.u is not None:
            if not (1 <= self.u <= self.v + 1 and self.v <= self.n):
                raise ValueError(f"bad bounds u={self.u}, v={self.v}")
            bad = [a for a in self.letters if self.u <= a <= self.v]
            if bad:
                raise ValueError(f"letters {bad} are used generators")

    def __mul__(self, other: "QuotientWord") -> "QuotientWord":
        if (self.n, self.u, self.v) != (other.n, other.u, other.v):
            raise ValueError("quotient words from different monoids")
        return QuotientWord(self.n, self.u, self.v, self.letters + other.letters)

    def __str__(self) -> str:
        return format_word(self.letters)

    def rewrites(self, w: Word) -> Iterator[Word]:
        yield from chinese_rewrites(w)
        if self.u is None:
            return
        for p in range(len(w) - 1):
            x, y = w[p], w[p + 1]
            if x != y and ((x < self.u and y < self.u) or (x > self.v and y > self.v)):
                yield w[:p] + (y, x) + w[p + 2:]

    def congruence_class(self, budget: int | None = None) -> frozenset[Word]:
        return closure(self.letters, self.rewrites, budget)

    def representative(self, budget: int | None = None) -> Word:
        """Lexicographically least word of the class; a normal form."""
        return min(self.congruence_class(budget))


def quotient_equal(x: QuotientWord, y: QuotientWord, budget: int | None = None) -> bool:
    if (x.n, x.u, x.v) != (y.n, y.u, y.v):
        raise ValueError("quotient words from different monoids")
    if sorted(x.letters) != sorted(y.letters):
        return False
    return y.letters in x.congruence_class(budget)


# -- products -----------------------------------------------------------


@dataclass(frozen=True)
class ArcFactor:
    b: BicyclicElement = BICYCLIC_ONE
    g: CyclicElement = CyclicElement()

    def __mul__(self, other: "ArcFactor") -> "ArcFactor":
        return ArcFactor(self.b * other.b, self.g * other.g)

    def to_json(self) -> dict:
        return {"arc": {"p": self.b.a, "q": self.b.b, "g": self.g.e}}


@dataclass(frozen=True)
class DotFactor:
    g: CyclicElement = CyclicElement()

    def __mul__(self, other: "DotFactor") -> "DotFactor":
        return DotFactor(self.g * other.g)

    def to_json(self) -> dict:
        return {"dot": {"g": self.g.e}}


Factor = ArcFactor | DotFactor


def _factor_from_json(data: dict) -> Factor:
    if "arc" in data:
        f = data["arc"]
        return ArcFactor(BicyclicElement(f["p"], f["q"]), CyclicElement(f["g"]))
    if "dot" in data:
        return DotFactor(CyclicElement(data["dot"]["g"]))
    raise ValueError(f"unknown factor {data!r}")


@dataclass(frozen=True)
class ProductElement:
    """An element of Cbar_n^{u,v} x (B x Z)^k x Z^l.

    Dataclass equality compares the raw quotient word; use
    :func:`product_equal` or compare :meth:`canonical` images for equality
    in the monoid.
    """

    quotient: QuotientWord
    factors: tuple[Factor, ...] = ()

    def __mul__(self, other: "ProductElement") -> "ProductElement":
        kinds = [type(f) for f in self.factors]
        if kinds != [type(f) for f in other.factors]:
            raise ValueError("factor kinds differ; elements come from different branches")
        return ProductElement(
            self.quotient * other.quotient,
            tuple(f * g for f, g in zip(self.factors, other.factors)),
        )

    def canonical(self, budget: int | None = None) -> "ProductElement":
        q = self.quotient
        rep = QuotientWord(q.n, q.u, q.v, q.representative(budget))
        return ProductElement(rep, self.factors)

    def to_json(self) -> dict:
        q = self.quotient
        return {
            "n": q.n,
            "u": q.u,
            "v": q.v,
            "quotient": format_word(q.letters),
            "factors": [f.to_json() for f in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "ProductElement":
        if isinstance(data, str):
            data = json.loads(data)
        q = QuotientWord(data["n"], data["u"], data["v"], parse_word(data["quotient"]))
        return cls(q, tuple(_factor_from_json(f) for f in data["factors"]))


def product_equal(x: ProductElement, y: ProductElement, budget: int | None = None) -> bool:
    return x.factors == y.factors and quotient_equal(x.quotient, y.quotient, budget)


# -- branch homomorphisms -----------------------------------------------


def _final_bounds(steps) -> tuple[int | None, int | None]:
    if not steps:
        return None, None
    return min(s.low for s in steps), max(s.high for s in steps)


def generator_image(n: int, steps: Sequence, i: int) -> ProductElement:
    """Image of a_i under the composite homomorphism of a branch.

    A generator stays in the quotient until a step uses it.  At each step a
    surviving a_i picks up (p, 1) below the new arc, (p, g) at its left end,
    (q, 1) at its right end or above it; a new dot gives g to its own
    generator and 1 to the rest.  Used generators contribute identities.
    """
    alive = True
    factors: list[Factor] = []
    for step in steps:
        if step.kind == "dot":
            factors.append(DotFactor(G if alive and i == step.low else CYCLIC_ONE))
            if i == step.low:
                alive = False
        elif step.kind == "arc":
            if not alive:
                factors.append(ArcFactor())
            elif i < step.low:
                factors.append(ArcFactor(P, CYCLIC_ONE))
            elif i == step.low:
                factors.append(ArcFactor(P, G))
            else:
                factors.append(ArcFactor(Q, CYCLIC_ONE))
            if i in (step.low, step.high):
                alive = False
        else:
            raise ValueError(f"unknown step kind {step.kind!r}")
    u, v = _final_bounds(steps)
    return ProductElement(QuotientWord(n, u, v, (i,) if alive else ()), tuple(factors))


def identity_image(n: int, steps: Sequence) -> ProductElement:
    u, v = _final_bounds(steps)
    identity = [DotFactor() if s.kind == "dot" else ArcFactor() for s in steps]
    return ProductElement(QuotientWord(n, u, v, ()), tuple(identity))


def apply_branch(branch, w: Sequence[int]) -> ProductElement:
    """kappa(d)(w): multiply the generator images letter by letter."""
    n, steps = branch.n, tuple(branch.steps)
    w = check_word(w, n)
    images = {i: generator_image(n, steps, i) for i in set(w)}
    result = identity_image(n, steps)
    for letter in w:
        result = result * images[letter]
    return result


def kappa_key(branch, w: Sequence[int], budget: int | None = None) -> tuple:
    """Hashable invariant with key(x) == key(y) iff x, y are congruent mod the branch."""
    image = apply_branch(branch, w).canonical(budget)
    return image.quotient.letters, image.factors


def congruent_mod(branch, x: Sequence[int], y: Sequence[int], budget: int | None = None) -> bool:
    """Whether (x, y) lies in the kernel congruence of the branch homomorphism."""
    return product_equal(apply_branch(branch, x), apply_branch(branch, y), budget)


def all_congruent(branch, pairs: Iterable[tuple[Word, Word]], budget: int | None = None):
    """First pair that is not congruent mod the branch, or None."""
    for x, y in pairs:
        if not congruent_mod(branch, x, y, budget):
            return x, y
    return None
