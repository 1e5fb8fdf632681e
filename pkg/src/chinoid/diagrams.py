"""The finite tree of diagrams whose leaves give the minimal primes of K[C_n].

A diagram marks a contiguous interval u..v of the vertices 1..n.  Marked
vertices are either joined in pairs by arcs or left as dots.  The first
level holds every single interior dot and every arc (s, s+1); deeper
diagrams come from the growth rules:

* after an arc: the enclosing arc (u-1, v+1), or a dot at u-1 or at v+1;
* after a dot on one side: the enclosing arc, or another dot on that side;
* after a first-level dot: only the enclosing arc.

A diagram is a leaf when one of its arcs touches vertex 1 or vertex n.
A dot on vertex 1 or n can never be followed by anything, so only interior
dots are generated (pass ``prune=False`` to :func:`children` to get the raw
rule output, dead ends included).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import Word, format_word
from .quotients import congruent_mod


class RankTooSmall(ValueError):
    pass


class IsLeaf(ValueError):
    pass


class CatalogMismatch(AssertionError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Step:
    """One construction step: ``kind`` is "arc" or "dot"; a dot has low == high."""

    kind: str
    low: int
    high: int

    def __str__(self) -> str:
        if self.kind == "dot":
            return f"dot({self.low})"
        return f"arc({self.low},{self.high})"


@dataclass(frozen=True)
class Diagram:
    """A vertex of the tree.

    Equality and hashing only look at the picture (rank, arcs, dots); the
    remaining fields record how the diagram was reached and drive the
    growth rules.
    """

    n: int
    arcs: frozenset = frozenset()
    dots: frozenset = frozenset()
    last: str = field(default="root", compare=False)
    side: str | None = field(default=None, compare=False)
    level: int = field(default=0, compare=False)

    @property
    def used(self) -> frozenset:
        return frozenset(self.dots) | {a for arc in self.arcs for a in arc}

    @property
    def interval(self) -> tuple[int, int] | None:
        used = self.used
        if not used:
            return None
        return min(used), max(used)

    @property
    def is_root(self) -> bool:
        return not self.used

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": sorted(list(a) for a in self.arcs), "dots": sorted(self.dots)}

    @classmethod
    def from_json(cls, data: dict | str) -> "Diagram":
        """Look the picture up in the tree, which restores its history."""
        if isinstance(data, str):
            data = json.loads(data)
        target = cls(data["n"], frozenset(tuple(a) for a in data["arcs"]), frozenset(data["dots"]))
        if target.is_root:
            return target
        for branch in walk(target.n, prune=False):
            if branch.leaf == target:
                return branch.leaf
        raise ValueError(f"diagram {data!r} does not occur in the tree")

    def render(self) -> str:
        """One line per diagram: ``○`` unused, ``●`` dot, brackets for arcs."""
        marks = []
        lows = {lo for lo, _ in self.arcs}
        highs = {hi for _, hi in self.arcs}
        for i in range(1, self.n + 1):
            if i in self.dots:
                marks.append("●")
            elif i in lows:
                marks.append("(")
            elif i in highs:
                marks.append(")")
            else:
                marks.append("○")
        return " ".join(marks)

    def __str__(self) -> str:
        return self.render()


def root(n: int) -> Diagram:
    return Diagram(n)


def _with_arc(d: Diagram, lo: int, hi: int) -> Diagram:
    return Diagram(d.n, d.arcs | {(lo, hi)}, d.dots, "arc", None, d.level + 1)


def _with_dot(d: Diagram, s: int, side: str | None) -> Diagram:
    return Diagram(d.n, d.arcs, d.dots | {s}, "dot", side, d.level + 1)


def first_level(n: int) -> list[Diagram]:
    if n < 2:
        raise RankTooSmall(f"the tree needs n >= 2, got {n}")
    base = root(n)
    dots = [_with_dot(base, s, None) for s in range(2, n)]
    arcs = [_with_arc(base, s, s + 1) for s in range(1, n)]
    return dots + arcs


def is_leaf(d: Diagram) -> bool:
    return any(lo == 1 or hi == d.n for lo, hi in d.arcs)


def children(d: Diagram, prune: bool = True) -> list[Diagram]:
    """Children in rule order: enclosing arc, then left dot, then right dot."""
    if d.is_root:
        return first_level(d.n)
    if is_leaf(d):
        raise IsLeaf(f"{d.render()} is a leaf")
    u, v = d.interval
    if d.last == "arc":
        options = [("arc", u - 1, v + 1), ("left", u - 1), ("right", v + 1)]
    elif d.level == 1:
        options = [("arc", u - 1, v + 1)]
    elif d.side == "left":
        options = [("arc", u - 1, v + 1), ("left", u - 1)]
    else:
        options = [("arc", u - 1, v + 1), ("right", v + 1)]
    lo_ok = 2 if prune else 1
    hi_ok = d.n - 1 if prune else d.n
    out = []
    for opt in options:
        if opt[0] == "arc":
            if opt[1] >= 1 and opt[2] <= d.n:
                out.append(_with_arc(d, opt[1], opt[2]))
        elif lo_ok <= opt[1] <= hi_ok:
            out.append(_with_dot(d, opt[1], opt[0]))
    return out


@dataclass(frozen=True)
class Branch:
    """A path d_1, ..., d_m from the first level down to a diagram."""

    diagrams: tuple[Diagram, ...]

    @property
    def n(self) -> int:
        return self.diagrams[0].n

    @property
    def leaf(self) -> Diagram:
        return self.diagrams[-1]

    @property
    def steps(self) -> tuple[Step, ...]:
        out = []
        prev = root(self.n)
        for d in self.diagrams:
            new_arcs = d.arcs - prev.arcs
            new_dots = d.dots - prev.dots
            if new_arcs:
                (lo, hi), = new_arcs
                out.append(Step("arc", lo, hi))
            else:
                (s,), = [tuple(new_dots)]
                out.append(Step("dot", s, s))
            prev = d
        return tuple(out)

    def extend(self, child: Diagram) -> "Branch":
        return Branch(self.diagrams + (child,))

    def __str__(self) -> str:
        return " -> ".join(map(str, self.steps))


def branch_from_steps(n: int, steps: Sequence[Step | tuple]) -> Branch:
    """Build a branch from steps such as ``("arc", 2, 3)`` or ``("dot", 1)``, checking every rule."""
    current = root(n)
    path = []
    for raw in steps:
        step = raw if isinstance(raw, Step) else Step(raw[0], raw[1], raw[-1])
        if not current.is_root and is_leaf(current):
            raise IsLeaf(f"cannot extend the leaf {current.render()}")
        for child in children(current, prune=False):
            new = (child.arcs - current.arcs) or {(s, s) for s in child.dots - current.dots}
            if new == {(step.low, step.high)} and (child.last == step.kind):
                current = child
                break
        else:
            raise ValueError(f"{step} is not a child of {current.render()}")
        path.append(current)
    return Branch(tuple(path))


def walk(n: int, prune: bool = True) -> Iterator[Branch]:
    """Depth-first preorder over every branch of the tree (root excluded)."""
    def rec(branch):
        yield branch
        if is_leaf(branch.leaf):
            return
        for c in children(branch.leaf, prune):
            yield from rec(branch.extend(c))

    for d in first_level(n):
        yield from rec(Branch((d,)))


def enumerate_leaves(n: int) -> list[Branch]:
    return [b for b in walk(n) if is_leaf(b.leaf)]


# -- relations visible in C_n / rho(d) ----------------------------------


def commute_pairs(gens: Sequence[int]) -> list[tuple[Word, Word]]:
    gens = sorted(set(gens))
    return [((i, j), (j, i)) for x, i in enumerate(gens) for j in gens[x + 1:]]


def central_pairs(z: Word, n: int) -> list[tuple[Word, Word]]:
    return [((i,) + tuple(z), tuple(z) + (i,)) for i in range(1, n + 1)]


def _sandwich_pairs(mid: int, outer: Sequence[int]) -> list[tuple[Word, Word]]:
    outer = sorted(set(outer))
    return [((i, mid, j), (j, mid, i)) for x, i in enumerate(outer) for j in outer[x + 1:]]


def _arc_run(d: Diagram) -> tuple[int, int] | None:
    """(s, t) if the arcs are exactly (s, s+1), ..., (s-t+1, s+t)."""
    if not d.arcs:
        return None
    inner = [a for a in d.arcs if a[1] - a[0] == 1]
    if len(inner) != 1:
        return None
    s = inner[0][0]
    t = len(d.arcs)
    if set(d.arcs) != {(s - r + 1, s + r) for r in range(1, t + 1)}:
        return None
    return s, t


def shape_relations(d: Diagram) -> dict[str, list[tuple[Word, Word]]]:
    """Relation families that hold in C_n / rho(d) for the special shapes.

    Covers a single dot, a run of t concentric arcs around (s, s+1), and such
    a run with one extra dot on its left.  Other shapes return ``{}``.
    """
    n = d.n
    low = range(1, n + 1)
    if not d.arcs and len(d.dots) == 1:
        (s,) = d.dots
        return {
            "rel1-1": commute_pairs([i for i in low if i <= s]),
            "rel1-2": commute_pairs([k for k in low if k >= s]),
        }
    run = _arc_run(d)
    if run is None:
        return {}
    s, t = run

    def sandwiches():
        inner = []
        outer = []
        for r in range(1, t + 1):
            inner += _sandwich_pairs(s + r, [i for i in low if i <= s - r + 1])
            outer += _sandwich_pairs(s - r + 1, [k for k in low if k >= s + r])
        return inner, outer

    if not d.dots:
        inner, outer = sandwiches()
        return {
            "rel2-1": commute_pairs([i for i in low if i <= s]),
            "rel2-2": commute_pairs([k for k in low if k > s]),
            "rel2-3": inner,
            "rel2-4": outer,
        }
    if d.dots == {s - t}:
        inner, outer = sandwiches()
        return {
            "rel3-1": commute_pairs([i for i in low if i <= s]),
            "rel3-2": commute_pairs([k for k in low if k > s]),
            "rel3-3": _sandwich_pairs(s - t, [k for k in low if k >= s + t]),
            "rel3-4": inner,
            "rel3-5": outer,
        }
    return {}


# -- catalog of minimal primes for n = 3, 4 -----------------------------


@dataclass(frozen=True)
class PrimeEntry:
    """A minimal prime given by the generators that commute and the central elements."""

    name: str
    arcs: frozenset
    dots: frozenset
    commuting: tuple[tuple[int, ...], ...] = ()
    central: tuple[Word, ...] = ()

    def relations(self, n: int) -> list[tuple[str, Word, Word]]:
        out = []
        for group in self.commuting:
            label = ",".join(f"a{g}" for g in group) + " commute"
            out += [(label, x, y) for x, y in commute_pairs(group)]
        for z in self.central:
            label = f"{format_word(z)} central".replace(" ", "")
            out += [(label, x, y) for x, y in central_pairs(z, n)]
        return out

    def describe(self) -> str:
        parts = [",".join(f"a{g}" for g in grp) + " commute" for grp in self.commuting]
        parts += [format_word(z).replace(" ", "") + " central" for z in self.central]
        return f"{self.name} = (" + ", ".join(parts) + ")"


def _entry(name, arcs, dots, commuting=(), central=()):
    return PrimeEntry(name, frozenset(arcs), frozenset(dots), tuple(commuting), tuple(central))


PRIME_CATALOG: dict[int, tuple[PrimeEntry, ...]] = {
    3: (
        _entry("P1", [(1, 2)], [], [(2, 3)], [(2, 1)]),
        _entry("P2", [(1, 3)], [2], [], [(2,)]),
        _entry("P3", [(2, 3)], [], [(1, 2)], [(3, 2)]),
    ),
    4: (
        _entry("P1", [(1, 2)], [], [(2, 3, 4)], [(2, 1), (3, 1)]),
        _entry("P2", [(1, 3)], [2], [(3, 4)], [(2,), (3, 1)]),
        _entry("P3", [(1, 4), (2, 3)], [], [(1, 2), (3, 4)], [(3, 2)]),
        _entry("P4", [(2, 4)], [3], [(1, 2)], [(3,), (4, 2)]),
        _entry("P5", [(3, 4)], [], [(1, 2, 3)], [(4, 2), (4, 3)]),
    ),
}


def catalog_entry(d: Diagram) -> PrimeEntry | None:
    for entry in PRIME_CATALOG.get(d.n, ()):
        if entry.arcs == d.arcs and entry.dots == d.dots:
            return entry
    return None


def leaf_for(n: int, name: str) -> Branch:
    """The leaf branch of the catalog entry called ``name`` (e.g. "P3")."""
    for branch in enumerate_leaves(n):
        entry = catalog_entry(branch.leaf)
        if entry is not None and entry.name == name:
            return branch
    raise KeyError(f"no leaf {name} for n={n}")


@dataclass
class LeafCheck:
    name: str | None
    branch: Branch
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.name is not None and not self.failures

    def to_json(self) -> dict:
        return {
            "prime": self.name,
            "diagram": self.branch.leaf.to_json(),
            "checked": self.checked,
            "passed": self.passed,
            "failures": [
                {"relation": lab, "x": format_word(x), "y": format_word(y)}
                for lab, x, y in self.failures
            ],
        }


def prime_catalog_check(n: int, raise_on_failure: bool = True) -> list[LeafCheck]:
    """Check every catalog relation against the kernel of each leaf's homomorphism."""
    if n not in PRIME_CATALOG:
        raise ValueError(f"no prime catalog for n={n}")
    report = []
    for branch in enumerate_leaves(n):
        entry = catalog_entry(branch.leaf)
        check = LeafCheck(entry.name if entry else None, branch)
        if entry is not None:
            for label, x, y in entry.relations(n):
                check.checked += 1
                if not congruent_mod(branch, x, y):
                    check.failures.append((label, x, y))
        report.append(check)
    names = sorted(c.name for c in report if c.name)
    expected = sorted(e.name for e in PRIME_CATALOG[n])
    if raise_on_failure:
        bad = [c for c in report if not c.passed]
        if bad or names != expected:
            first = bad[0] if bad else None
            if first is None:
                msg = f"leaves match primes {names}, expected {expected}"
            elif first.name is None:
                msg = f"leaf {first.branch.leaf.render()} is not in the catalog"
            else:
                lab, x, y = first.failures[0]
                msg = f"{first.name}: {lab} fails for {format_word(x)} vs {format_word(y)}"
            raise CatalogMismatch(msg, report)
    return report
