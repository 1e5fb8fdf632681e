"""Words over the generators of the Chinese monoid and their canonical forms.

The Chinese monoid C_n is generated by a_1, ..., a_n subject to

    a_j a_k a_i = a_k a_j a_i = a_k a_i a_j      for i <= j <= k.

Every relation preserves length and the multiset of letters, so the
congruence class of a word is a finite set that can be enumerated by
breadth-first search over single rewrites.  Normalization picks the unique
member of that class having the staircase shape b_1 b_2 ... b_n with

    b_i = (a_i a_1)^{k_{i,1}} ... (a_i a_{i-1})^{k_{i,i-1}} a_i^{k_{i,i}}.

A word is a plain tuple of generator indices, e.g. ``(3, 1, 2)`` for
a_3 a_1 a_2; the empty tuple is the identity.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

Generator = int  # index in 1..n
Word = tuple[Generator, ...]

DEFAULT_CLASS_BUDGET = 200_000
BUDGET_ENV = "CHINOID_CLASS_BUDGET"


class ClassBudgetExceeded(RuntimeError):
    """A congruence class grew past the configured size bound."""


class CanonicalFormError(AssertionError):
    """The closure of a word did not contain exactly one staircase word.

    Raising this means the implementation is broken: every class is known
    to contain exactly one such word.
    """


class NoCanonicalMember(CanonicalFormError):
    pass


class MultipleCanonicalMembers(CanonicalFormError):
    pass


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    if value is None:
        return DEFAULT_CLASS_BUDGET
    return int(value)


# -- word text format ---------------------------------------------------


def parse_word(text: str) -> Word:
    """Parse ``"a3 a1 a2"`` into ``(3, 1, 2)``; ``"1"`` or ``""`` is empty."""
    tokens = text.replace(",", " ").split()
    if tokens in ([], ["1"]):
        return ()
    letters = []
    for tok in tokens:
        if len(tok) < 2 or tok[0] != "a" or not tok[1:].isdigit():
            raise ValueError(f"bad generator token {tok!r}; expected a<k>")
        letters.append(int(tok[1:]))
    return tuple(letters)


def format_word(w: Sequence[int]) -> str:
    if not w:
        return "1"
    return " ".join(f"a{i}" for i in w)


def check_word(w: Sequence[int], n: int) -> Word:
    w = tuple(w)
    for letter in w:
        if not isinstance(letter, int) or not 1 <= letter <= n:
            raise ValueError(f"letter {letter!r} outside 1..{n}")
    return w


def all_words(n: int, length: int) -> Iterator[Word]:
    """Every word of the given length, in lexicographic order."""
    if length == 0:
        yield ()
        return
    for head in range(1, n + 1):
        for tail in all_words(n, length - 1):
            yield (head,) + tail


# -- the congruence -----------------------------------------------------


def relation_triples(i: int, j: int, k: int) -> tuple[Word, Word, Word]:
    """The three words identified by the defining relation for i <= j <= k."""
    return (j, k, i), (k, j, i), (k, i, j)


def _chinese_alternatives(triple: Word) -> set[Word]:
    i, j, k = sorted(triple)
    words = set(relation_triples(i, j, k))
    if triple not in words:
        return set()
    words.discard(triple)
    return words


def chinese_rewrites(w: Word) -> Iterator[Word]:
    """Words obtained from w by one application of a defining relation."""
    for p in range(len(w) - 2):
        for alt in _chinese_alternatives(w[p:p + 3]):
            yield w[:p] + alt + w[p + 3:]


def closure(
    w: Word,
    rewrites: Callable[[Word], Iterable[Word]],
    budget: int | None = None,
) -> frozenset[Word]:
    """Breadth-first closure of ``{w}`` under a symmetric rewrite relation."""
    if budget is None:
        budget = default_budget()
    seen = {w}
    queue = deque([w])
    while queue:
        current = queue.popleft()
        for nxt in rewrites(current):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > budget:
                    raise ClassBudgetExceeded(
                        f"class of {format_word(w)} exceeds {budget} words"
                    )
                queue.append(nxt)
    return frozenset(seen)


def congruence_class(w: Sequence[int], n: int, budget: int | None = None) -> frozenset[Word]:
    """All words equal to w in C_n."""
    return closure(check_word(w, n), chinese_rewrites, budget)


def word_classes(n: int, length: int, budget: int | None = None) -> list[frozenset[Word]]:
    """Partition of all words of one length into congruence classes."""
    remaining = set(all_words(n, length))
    classes = []
    for w in all_words(n, length):
        if w in remaining:
            cls = congruence_class(w, n, budget)
            remaining -= cls
            classes.append(cls)
    return classes


# -- canonical forms ----------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Exponent triangle of a staircase word; ``k[i-1][j-1]`` is k_{i,j}."""

    n: int
    k: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if len(self.k) != self.n or any(len(row) != i + 1 for i, row in enumerate(self.k)):
            raise ValueError("exponent triangle has the wrong shape")
        if any(e < 0 for row in self.k for e in row):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def identity(cls, n: int) -> "CanonicalForm":
        return cls(n, tuple((0,) * (i + 1) for i in range(n)))

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence[int]]) -> "CanonicalForm":
        return cls(n, tuple(tuple(int(e) for e in row) for row in rows))

    def exponent(self, i: int, j: int) -> int:
        return self.k[i - 1][j - 1]

    def expand(self) -> Word:
        letters: list[int] = []
        for i, row in enumerate(self.k, start=1):
            for j in range(1, i):
                letters.extend((i, j) * row[j - 1])
            letters.extend((i,) * row[i - 1])
        return tuple(letters)

    def degree(self, i: int | None = None) -> int:
        """Number of letters a_i in the element, or the total length."""
        if i is None:
            return sum(self.degree(g) for g in range(1, self.n + 1))
        if not 1 <= i <= self.n:
            raise ValueError(f"generator a{i} outside rank {self.n}")
        own = sum(self.k[i - 1])
        below = sum(self.k[l - 1][i - 1] for l in range(i + 1, self.n + 1))
        return own + below

    def __mul__(self, other: "CanonicalForm") -> "CanonicalForm":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_word(self.expand())

    def to_json(self) -> dict:
        return {"n": self.n, "k": [list(row) for row in self.k]}

    @classmethod
    def from_json(cls, data: dict | str) -> "CanonicalForm":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_rows(data["n"], data["k"])


def parse_canonical(w: Sequence[int], n: int) -> CanonicalForm | None:
    """Read w as a staircase word b_1 ... b_n, or return None.

    Inside block i a letter a_i followed by a smaller letter a_j must open a
    pair (a_i a_j); any other a_i belongs to the trailing power a_i^{k_ii}.
    This makes the parse deterministic, so the exponent triangle is unique.
    """
    w = tuple(w)
    p = 0
    rows = []
    for i in range(1, n + 1):
        row = [0] * i
        last_j = 1
        while p + 1 < len(w) and w[p] == i and w[p + 1] < i:
            j = w[p + 1]
            if j < last_j:
                return None
            row[j - 1] += 1
            last_j = j
            p += 2
        while p < len(w) and w[p] == i:
            row[i - 1] += 1
            p += 1
        rows.append(tuple(row))
    if p != len(w):
        return None
    return CanonicalForm(n, tuple(rows))


def is_canonical_word(w: Sequence[int], n: int) -> bool:
    return parse_canonical(w, n) is not None


def normalize(w: Sequence[int], n: int, budget: int | None = None) -> CanonicalForm:
    """Canonical form of w, found by scanning its congruence class."""
    cls = congruence_class(w, n, budget)
    found = [cf for cf in (parse_canonical(m, n) for m in cls) if cf is not None]
    if not found:
        raise NoCanonicalMember(f"no staircase word in the class of {format_word(w)}")
    if len(found) > 1:
        raise MultipleCanonicalMembers(
            f"{len(found)} staircase words in the class of {format_word(w)}"
        )
    return found[0]


def multiply(x: CanonicalForm, y: CanonicalForm, budget: int | None = None) -> CanonicalForm:
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x.n} vs {y.n}")
    return normalize(x.expand() + y.expand(), x.n, budget)


def degree(x: CanonicalForm, i: int) -> int:
    return x.degree(i)


def equivalent(x: Sequence[int], y: Sequence[int], n: int, budget: int | None = None) -> bool:
    """Whether two words represent the same element of C_n."""
    x, y = check_word(x, n), check_word(y, n)
    if len(x) != len(y) or sorted(x) != sorted(y):
        return False
    return y in congruence_class(x, n, budget)


def left_divisor_shift_check(n: int, x: Sequence[int], budget: int | None = None) -> Word:
    """Return w with a_n x a_1 = a_n a_1 w in C_n.

    The search runs over the class of a_n x a_1; a member starting with
    a_n a_1 always exists, which is the inclusion a_n C_n a_1 inside
    a_n a_1 C_n used for irreducible representations.
    """
    x = check_word(x, n)
    members = congruence_class((n,) + x + (1,), n, budget)
    prefixed = sorted(m[2:] for m in members if m[:2] == (n, 1))
    if not prefixed:
        raise CanonicalFormError(f"a{n} x a1 has no member with prefix a{n} a1 for x={format_word(x)}")
    # prefer the witness that keeps x's order when possible
    if x in prefixed:
        return x
    return prefixed[0]


# -- fast path ----------------------------------------------------------
#
# The insertion rule below was fitted to the closure-based normalizer and is
# only trusted because ``validate_insertion`` reproduces the reference on a
# full grid; the tests run that grid.


def insert_letter(x: CanonicalForm, j: int) -> CanonicalForm:
    """Canonical form of x a_j computed by bumping through the blocks.

    Blocks are visited from b_n downwards.  A block with a spare trailing
    a_i absorbs the letter as a new pair (a_i a_j).  Otherwise the pair
    (a_i a_m) with the largest m in (j, i) is rewritten to (a_i a_j) and a_m
    travels on to the lower blocks.  A letter reaching its own block joins
    the trailing power.
    """
    n = x.n
    if not 1 <= j <= n:
        raise ValueError(f"letter a{j} outside rank {n}")
    k = [list(row) for row in x.k]
    i = n
    while i > j:
        row = k[i - 1]
        if row[i - 1] > 0:
            row[i - 1] -= 1
            row[j - 1] += 1
            return CanonicalForm.from_rows(n, k)
        bumped = next((m for m in range(i - 1, j, -1) if row[m - 1] > 0), None)
        if bumped is not None:
            row[bumped - 1] -= 1
            row[j - 1] += 1
            j = bumped
        i -= 1
    k[j - 1][j - 1] += 1
    return CanonicalForm.from_rows(n, k)


def normalize_fast(w: Sequence[int], n: int) -> CanonicalForm:
    x = CanonicalForm.identity(n)
    for letter in check_word(w, n):
        x = insert_letter(x, letter)
    return x


def multiply_fast(x: CanonicalForm, y: CanonicalForm) -> CanonicalForm:
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x.n} vs {y.n}")
    for letter in y.expand():
        x = insert_letter(x, letter)
    return x


def canonical_forms(n: int, max_degree: int) -> list[CanonicalForm]:
    """All canonical forms of total degree at most ``max_degree``."""
    out = []
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
    weights = [1 if i == j else 2 for i, j in cells]

    def rec(pos, left, exps):
        if pos == len(cells):
            rows = []
            it = iter(exps)
            for i in range(1, n + 1):
                rows.append(tuple(next(it) for _ in range(i)))
            out.append(CanonicalForm(n, tuple(rows)))
            return
        for e in range(left // weights[pos] + 1):
            rec(pos + 1, left - e * weights[pos], exps + [e])

    rec(0, max_degree, [])
    return out


def validate_insertion(n: int, max_degree: int, budget: int | None = None) -> list[tuple]:
    """Compare ``insert_letter`` with the reference on every (form, letter).

    Returns the mismatches as ``(form, letter, reference, fast)``; an empty
    list means the fast path is exact on that grid.
    """
    bad = []
    for x in canonical_forms(n, max_degree):
        for a in range(1, n + 1):
            ref = normalize(x.expand() + (a,), n, budget)
            got = insert_letter(x, a)
            if got != ref:
                bad.append((x, a, ref, got))
    return bad
