"""Monomial representations of the Chinese monoid.

A :class:`MonomialRep` acts on the vector space with basis e_I, I ranging
over multi-indices (i_1, ..., i_s) of nonnegative integers.  Each generator
is described by data, not code: a scalar, an integer shift per position and
a guard (the positions that must be positive, otherwise the generator
kills the vector).  So every generator, and every word, sends a basis
vector to a multiple of a basis vector or to zero, i.e. the representation
is monomial by construction.

Field elements are exact rationals (:class:`fractions.Fraction`).  Index
positions are 0-based throughout the Python API and the JSON encoding.

Infinite-dimensional modules are verified on the box of multi-indices with
every entry in 0..box.  Vectors are sparse, so images leaving the box are
tracked exactly.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .core import Word, check_word, format_word, relation_triples

Scalar = Fraction
MultiIndex = tuple[int, ...]
# named parameters as stored on a MonomialRep, e.g. (("lambda1", 2), ("lambda2", 3))
RepParams = tuple[tuple[str, Scalar], ...]

DEFAULT_SEED = 0xC41E5E


class RepError(ValueError):
    pass


class OddRank(RepError):
    pass


class ZeroParameter(RepError):
    pass


class ConstraintViolation(RepError):
    pass


class HypothesisViolated(RepError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotScalar(RepError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ZeroVector(RepError):
    pass


def as_scalar(x) -> Scalar:
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, str or Fraction")
    return Fraction(x)


def parse_scalars(text: str) -> list[Scalar]:
    """``"3/2,1,5"`` -> [3/2, 1, 5]."""
    return [as_scalar(t) for t in text.split(",") if t.strip()]


def format_scalar(c: Scalar) -> str:
    return str(Fraction(c))


# -- sparse vectors -----------------------------------------------------


def _index_key(idx: MultiIndex) -> str:
    return "(" + ",".join(map(str, idx)) + ")"


def _parse_index(key: str) -> MultiIndex:
    body = key.strip().strip("()")
    return tuple(int(t) for t in body.split(",") if t.strip())


class SparseVector:
    """Finite combination of basis vectors with nonzero rational coefficients."""

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[MultiIndex, object] | Iterable = ()):
        self.arity = arity
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[MultiIndex, Scalar] = {}
        for idx, c in items:
            idx = tuple(idx)
            if len(idx) != arity or any(i < 0 for i in idx):
                raise ValueError(f"bad multi-index {idx} for arity {arity}")
            acc[idx] = acc.get(idx, Fraction(0)) + as_scalar(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def basis(cls, idx: Sequence[int], coef=1) -> "SparseVector":
        idx = tuple(idx)
        return cls(len(idx), {idx: coef})

    @classmethod
    def zero(cls, arity: int) -> "SparseVector":
        return cls(arity)

    def items(self):
        return self._terms.items()

    def support(self) -> list[MultiIndex]:
        return sorted(self._terms)

    def coefficient(self, idx: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(idx), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    def __add__(self, other: "SparseVector") -> "SparseVector":
        return SparseVector(self.arity, itertools.chain(self.items(), other.items()))

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + other * -1

    def __mul__(self, c) -> "SparseVector":
        c = as_scalar(c)
        return SparseVector(self.arity, ((k, v * c) for k, v in self.items()))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"{format_scalar(c)}*e{_index_key(k)}" for k, c in sorted(self.items()))

    def to_json(self) -> dict:
        return {_index_key(k): format_scalar(c) for k, c in sorted(self.items())}

    @classmethod
    def from_json(cls, data: dict | str, arity: int | None = None) -> "SparseVector":
        if isinstance(data, str):
            data = json.loads(data)
        terms = {_parse_index(k): as_scalar(v) for k, v in data.items()}
        if arity is None:
            if not terms:
                raise ValueError("arity is needed for the zero vector")
            arity = len(next(iter(terms)))
        return cls(arity, terms)


# -- action data --------------------------------------------------------


@dataclass(frozen=True)
class Action:
    """e_I -> scalar * e_{I + shift}, or 0 if some guarded position of I is 0."""

    scalar: Scalar
    shift: tuple[int, ...]
    guard: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "scalar", as_scalar(self.scalar))
        object.__setattr__(self, "shift", tuple(self.shift))
        object.__setattr__(self, "guard", tuple(sorted(set(self.guard))))
        if any(d < -1 for d in self.shift):
            raise RepError("shifts go down by at most one per letter")
        needed = tuple(p for p, d in enumerate(self.shift) if d < 0)
        if self.guard != needed:
            raise RepError(f"guard {self.guard} must be exactly the lowered positions {needed}")

    @classmethod
    def make(cls, scalar, shift: Sequence[int]) -> "Action":
        """Action with the guard derived from the shift."""
        return cls(scalar, tuple(shift), tuple(p for p, d in enumerate(shift) if d < 0))

    def apply(self, idx: MultiIndex) -> tuple[Scalar, MultiIndex] | None:
        if self.scalar == 0 or any(idx[p] == 0 for p in self.guard):
            return None
        return self.scalar, tuple(i + d for i, d in zip(idx, self.shift))

    def to_json(self) -> dict:
        return {"scalar": format_scalar(self.scalar), "shift": list(self.shift), "guard": list(self.guard)}

    @classmethod
    def from_json(cls, data: dict) -> "Action":
        return cls(as_scalar(data["scalar"]), tuple(data["shift"]), tuple(data.get("guard", ())))


def _shift_on(arity: int, positions: Iterable[int], delta: int) -> tuple[int, ...]:
    positions = set(positions)
    return tuple(delta if p in positions else 0 for p in range(arity))


@dataclass(frozen=True)
class MonomialRep:
    """Representation of C_n; ``actions[j-1]`` describes a_j."""

    n: int
    arity: int
    actions: tuple[Action, ...]
    name: str = ""
    params: tuple[tuple[str, Scalar], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.actions) != self.n:
            raise RepError(f"need {self.n} actions, got {len(self.actions)}")
        for a in self.actions:
            if len(a.shift) != self.arity:
                raise RepError(f"shift {a.shift} does not match arity {self.arity}")

    def action(self, j: int) -> Action:
        return self.actions[j - 1]

    def with_action(self, j: int, action: Action) -> "MonomialRep":
        acts = list(self.actions)
        acts[j - 1] = action
        return MonomialRep(self.n, self.arity, tuple(acts), self.name + "*", self.params)

    def box(self, size: int) -> Iterator[MultiIndex]:
        return itertools.product(range(size + 1), repeat=self.arity)

    def describe(self) -> str:
        lines = [f"{self.name or 'rep'} on C_{self.n}, {self.arity}-index basis"]
        for j, a in enumerate(self.actions, start=1):
            lines.append(f"  a{j}: {_describe_action(a)}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "arity": self.arity,
            "name": self.name,
            "params": {k: format_scalar(v) for k, v in self.params},
            "generators": [a.to_json() for a in self.actions],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "MonomialRep":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            data["n"],
            data["arity"],
            tuple(Action.from_json(g) for g in data["generators"]),
            data.get("name", ""),
            tuple((k, as_scalar(v)) for k, v in data.get("params", {}).items()),
        )


def _describe_action(a: Action) -> str:
    if a.scalar == 0:
        return "0"
    idx = []
    for p, d in enumerate(a.shift):
        sym = f"i{p + 1}"
        idx.append(sym if d == 0 else f"{sym}{d:+d}")
    coef = "" if a.scalar == 1 else f"{format_scalar(a.scalar)} "
    return f"e_I -> {coef}e({','.join(idx)})"


# -- acting -------------------------------------------------------------


def act_basis(rep: MonomialRep, w: Sequence[int], idx: Sequence[int]) -> tuple[Scalar, MultiIndex] | None:
    """Image of e_idx under w as (coefficient, index), or None for zero."""
    coef = Fraction(1)
    idx = tuple(idx)
    for letter in reversed(tuple(w)):
        out = rep.actions[letter - 1].apply(idx)
        if out is None:
            return None
        c, idx = out
        coef *= c
    return coef, idx


def act(rep: MonomialRep, w: Sequence[int], v: SparseVector) -> SparseVector:
    """Left action of the word w; its rightmost letter acts first."""
    w = check_word(w, rep.n)
    if v.arity != rep.arity:
        raise ValueError(f"vector arity {v.arity} != rep arity {rep.arity}")
    terms = []
    for idx, c in v.items():
        out = act_basis(rep, w, idx)
        if out is not None:
            terms.append((out[1], c * out[0]))
    return SparseVector(rep.arity, terms)


# -- verification -------------------------------------------------------


@dataclass
class Report:
    """Outcome of a boxed sweep; ``witness`` describes the first failure."""

    name: str
    passed: bool = True
    checked: int = 0
    witness: dict | None = None

    def fail(self, **witness):
        if self.passed:
            self.passed = False
            self.witness = witness

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked, "witness": self.witness}


def _words_agree(rep, x, y, idx):
    return act_basis(rep, x, idx) == act_basis(rep, y, idx)


def _show(out):
    if out is None:
        return "0"
    c, idx = out
    return f"{format_scalar(c)}*e{_index_key(idx)}"


def verify_word_pairs(rep: MonomialRep, pairs: Iterable[tuple[Word, Word]], box: int, name="pairs") -> Report:
    """Check that each pair of words acts identically on every boxed basis vector."""
    report = Report(name)
    pairs = list(pairs)
    for idx in rep.box(box):
        for x, y in pairs:
            report.checked += 1
            if not _words_agree(rep, x, y, idx):
                report.fail(
                    x=format_word(x), y=format_word(y), index=list(idx),
                    x_image=_show(act_basis(rep, x, idx)), y_image=_show(act_basis(rep, y, idx)),
                )
                return report
    return report


def chinese_relation_pairs(n: int) -> list[tuple[Word, Word]]:
    pairs = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                w1, w2, w3 = relation_triples(i, j, k)
                pairs += [(w1, w2), (w1, w3)]
    return pairs


def verify_relations(rep: MonomialRep, box: int) -> Report:
    """Every defining relation of C_n on every basis vector of the box."""
    return verify_word_pairs(rep, chinese_relation_pairs(rep.n), box, name=f"relations {rep.name}")


def relation_cases(n: int) -> dict[int, list[tuple[Word, Word]]]:
    """The six word identities that reduce the relation check for V(lambda).

    Cases 1-3 compare a_l a_k a_j with a_l a_j a_k for j <= s < k <= l,
    cases 4-6 compare a_l a_k a_j with a_k a_l a_j for j <= k <= s < l,
    split by the position of j + l, j + k or k + l relative to n.
    """
    if n % 2:
        raise OddRank(f"n={n} is odd")
    s = n // 2
    cases: dict[int, list] = {c: [] for c in range(1, 7)}
    for j in range(1, s + 1):
        for k in range(s + 1, n + 1):
            for l in range(k, n + 1):
                pair = ((l, k, j), (l, j, k))
                if j + l <= n:
                    cases[1].append(pair)
                elif j + k <= n:
                    cases[2].append(pair)
                else:
                    cases[3].append(pair)
    for j in range(1, s + 1):
        for k in range(j, s + 1):
            for l in range(s + 1, n + 1):
                pair = ((l, k, j), (k, l, j))
                if k + l <= n:
                    cases[4].append(pair)
                elif j + l <= n:
                    cases[5].append(pair)
                else:
                    cases[6].append(pair)
    return cases


def is_monomial(rep: MonomialRep, box: int) -> Report:
    """Each generator maps each boxed basis vector to zero or one scaled basis vector."""
    report = Report(f"monomial {rep.name}")
    for idx in rep.box(box):
        for j in range(1, rep.n + 1):
            report.checked += 1
            image = act(rep, (j,), SparseVector.basis(idx))
            if len(image) > 1:
                report.fail(generator=j, index=list(idx), image=image.to_json())
                return report
    return report


def acts_as_zero(rep: MonomialRep, w: Sequence[int], box: int) -> bool:
    return all(act_basis(rep, w, idx) is None for idx in rep.box(box))


def zero_divisor_consequence(rep: MonomialRep, box: int) -> bool:
    """If a_n a_1 kills the box then a_n or a_1 kills it too."""
    n = rep.n
    if not acts_as_zero(rep, (n, 1), box):
        return True
    return acts_as_zero(rep, (n,), box) or acts_as_zero(rep, (1,), box)


# -- the simple modules V(lambda_1, ..., lambda_s) ----------------------


def _check_params(lams) -> list[Scalar]:
    lams = [as_scalar(x) for x in lams]
    for i, lam in enumerate(lams, start=1):
        if lam == 0:
            raise ZeroParameter(f"lambda_{i} must be nonzero")
    return lams


def standard_module(n: int, lambdas: Sequence) -> MonomialRep:
    """V(lambda_1, ..., lambda_s) for n = 2s.

    a_j for j <= s multiplies by lambda_j and raises positions j..s;
    a_j for j > s lowers positions n-j+1..s (1-based), killing e_I when one
    of them is already 0.
    """
    if n < 2 or n % 2:
        raise OddRank(f"standard modules need an even rank, got n={n}")
    s = n // 2
    lams = _check_params(lambdas)
    if len(lams) != s:
        raise RepError(f"need {s} parameters, got {len(lams)}")
    acts = []
    for j in range(1, n + 1):
        if j <= s:
            acts.append(Action.make(lams[j - 1], _shift_on(s, range(j - 1, s), 1)))
        else:
            acts.append(Action.make(1, _shift_on(s, range(n - j, s), -1)))
    params = tuple((f"lambda{i}", lam) for i, lam in enumerate(lams, start=1))
    return MonomialRep(n, s, tuple(acts), f"V({','.join(map(format_scalar, lams))})", params)


def z_module(lam) -> MonomialRep:
    """The C_2-module Z: a_1 e_i = lambda e_{i+1}, a_2 e_i = e_{i-1}."""
    rep = standard_module(2, [lam])
    return MonomialRep(2, 1, rep.actions, f"Z({format_scalar(as_scalar(lam))})", rep.params)


def trivial_module() -> MonomialRep:
    """The one-point module of the trivial monoid C_0."""
    return MonomialRep(0, 0, (), "K")


def one_dimensional(scalars: Sequence) -> MonomialRep:
    """a_j acts on a single basis vector e_() by scalars[j-1]; any choice is a rep."""
    cs = [as_scalar(c) for c in scalars]
    acts = tuple(Action(c, ()) for c in cs)
    params = tuple((f"c{j}", c) for j, c in enumerate(cs, start=1))
    return MonomialRep(len(cs), 0, acts, f"K({','.join(map(format_scalar, cs))})", params)


def _require_standard_shape(rep: MonomialRep):
    if rep.n % 2 or rep.n < 2 or rep.arity != rep.n // 2:
        raise RepError(f"{rep.name} does not have the shape of a standard module")


def central_scalars(rep: MonomialRep, box: int) -> list[tuple[int, Scalar]]:
    """Scalars by which a_{n-i+1} a_i act, i = 1..s, checked on the whole box."""
    _require_standard_shape(rep)
    n, s = rep.n, rep.n // 2
    out = []
    for i in range(1, s + 1):
        w = (n - i + 1, i)
        value = None
        for idx in rep.box(box):
            image = act_basis(rep, w, idx)
            c = Fraction(0) if image is None else image[0]
            if (image is not None and image[1] != idx) or (value is not None and c != value):
                raise NotScalar(
                    f"a{n - i + 1} a{i} is not a scalar on {rep.name}",
                    {"pair": i, "index": list(idx), "image": _show(image), "expected": value},
                )
            value = c
        out.append((i, value))
    return out


def lexicographic_maxima(v: SparseVector) -> MultiIndex:
    """(m_1, ..., m_s): the lexicographically largest index in the support."""
    if not v:
        raise ZeroVector("the zero vector generates nothing")
    return max(v.support())


def cyclic_reach(rep: MonomialRep, v: SparseVector) -> tuple[Word, Scalar]:
    """A word x and c != 0 with x v = c e_(0,...,0) in a standard module.

    x = a_{s+1}^{m_s} (a_{s+2} a_s)^{m_{s-1}} ... (a_n a_2)^{m_1}; the pair
    a_{n-j+1} a_{j+1} lowers i_j by one with factor lambda_{j+1}, and every
    support term other than e_m is killed along the way.
    """
    _require_standard_shape(rep)
    n, s = rep.n, rep.n // 2
    m = lexicographic_maxima(v)
    lams = [rep.action(j).scalar for j in range(1, s + 1)]
    word: list[int] = [s + 1] * m[s - 1]
    c = v.coefficient(m)
    for j in range(s - 1, 0, -1):
        word += [n - j + 1, j + 1] * m[j - 1]
        c *= lams[j] ** m[j - 1]
    return tuple(word), c


def spanning_word(rep: MonomialRep, idx: Sequence[int]) -> tuple[Word, Scalar]:
    """x and c with x e_0 = c e_idx: (a_{n-1} a_1)^{i_1} ... (a_{s+1} a_{s-1})^{i_{s-1}} a_s^{i_s}."""
    _require_standard_shape(rep)
    n, s = rep.n, rep.n // 2
    word: list[int] = []
    c = Fraction(1)
    for j in range(1, s):
        word += [n - j, j] * idx[j - 1]
        c *= rep.action(j).scalar ** idx[j - 1]
    word += [s] * idx[s - 1]
    c *= rep.action(s).scalar ** idx[s - 1]
    return tuple(word), c


def random_vector(arity: int, rng: random.Random, box: int = 4, terms: int = 4) -> SparseVector:
    """Nonzero vector with up to ``terms`` support points in the box."""
    while True:
        data = {}
        for _ in range(rng.randint(1, terms)):
            idx = tuple(rng.randint(0, box) for _ in range(arity))
            num = rng.choice([x for x in range(-9, 10) if x])
            data[idx] = Fraction(num, rng.randint(1, 5))
        v = SparseVector(arity, data)
        if v:
            return v


# -- inductive construction ---------------------------------------------


def inductive_extend(U: MonomialRep, lam, box: int = 4, check: bool = True) -> MonomialRep:
    """Tensor U with a one-index module to get a module over C_{m+2}.

    U is a rep of rank m = 2(s-1) standing for the submonoid generated by
    a_1..a_{s-1}, a_{s+2}..a_n of C_n, n = 2s; its generator j >= s plays the
    role of a_{j+2}.  In the result generators below a_s act as in U and
    raise the new last index, a_s multiplies by lambda and raises it,
    a_{s+1} lowers it and generators above a_{s+1} act as in U and lower it.

    With ``check`` the hypotheses that the low generators of U commute and
    the high ones commute are verified on the box.  Reachability of every
    basis vector from every nonzero vector of U is not decidable this way;
    for standard-shaped U it is supported by :func:`cyclic_reach`.
    """
    lam = as_scalar(lam)
    if lam == 0:
        raise ZeroParameter("the new parameter must be nonzero")
    m = U.n
    if m % 2 or U.arity != m // 2:
        raise HypothesisViolated(f"{U.name} must have rank 2(s-1) and s-1 indices")
    s = U.arity + 1
    n = m + 2
    if check:
        low = list(range(1, s))
        high = list(range(s, m + 1))
        for group in (low, high):
            pairs = [((a, b), (b, a)) for a, b in itertools.combinations(group, 2)]
            rep = verify_word_pairs(U, pairs, box, "commutation hypothesis")
            if not rep.passed:
                raise HypothesisViolated("generators of U do not commute", rep.witness)
    acts = []
    for j in range(1, n + 1):
        if j < s:
            base = U.action(j)
            acts.append(Action.make(base.scalar, base.shift + (1,)))
        elif j == s:
            acts.append(Action.make(lam, (0,) * (s - 1) + (1,)))
        elif j == s + 1:
            acts.append(Action.make(1, (0,) * (s - 1) + (-1,)))
        else:
            base = U.action(j - 2)
            acts.append(Action.make(base.scalar, base.shift + (-1,)))
    params = U.params + ((f"lambda{s}", lam),)
    return MonomialRep(n, s, tuple(acts), f"{U.name}(x){format_scalar(lam)}", params)


# -- catalogs for small rank --------------------------------------------


def _one_index(n: int, spec: Sequence[tuple[object, int]], name: str, params) -> MonomialRep:
    acts = tuple(Action.make(c, (d,)) for c, d in spec)
    return MonomialRep(n, 1, acts, name, tuple(params))


@dataclass(frozen=True)
class Family:
    """A parametrized family of simple modules; ``build`` takes the parameters by name."""

    n: int
    id: str
    params: tuple[str, ...]
    constraint: str
    action_text: str
    build: Callable[..., MonomialRep] = field(compare=False, repr=False)

    def __call__(self, **kwargs) -> MonomialRep:
        return self.build(**kwargs)


def _nonzero(name, value):
    if as_scalar(value) == 0:
        raise ConstraintViolation(f"{name} must be nonzero")


def _family_builders(n: int) -> list[Family]:
    fams: list[Family] = []

    def add(fid, params, constraint, text, fn):
        fams.append(Family(n, fid, tuple(params), constraint, text, fn))

    def one_dim(c):
        cs = parse_scalars(c) if isinstance(c, str) else list(c)
        if len(cs) != n:
            raise ConstraintViolation(f"need {n} scalars")
        return one_dimensional(cs)

    add("1-dim", ["c"], "any c_1..c_n", "a_j e = c_j e", one_dim)

    if n == 2:
        def fz(lam):
            _nonzero("lambda", lam)
            return z_module(lam)
        add("Z", ["lam"], "lambda != 0", "a1 e_i = lambda e_{i+1}, a2 e_i = e_{i-1}", fz)

    if n == 3:
        def f1(lam, mu):
            _nonzero("lambda", lam)
            return _one_index(3, [(lam, 1), (1, -1), (mu, -1)], "C3(1)", [("lambda", as_scalar(lam)), ("mu", as_scalar(mu))])

        def f2(lam, mu):
            _nonzero("lambda", lam)
            return _one_index(3, [(lam, 1), (mu, 0), (1, -1)], "C3(2)", [("lambda", as_scalar(lam)), ("mu", as_scalar(mu))])

        def f3(lam, mu):
            _nonzero("mu", mu)
            return _one_index(3, [(lam, 1), (mu, 1), (1, -1)], "C3(3)", [("lambda", as_scalar(lam)), ("mu", as_scalar(mu))])

        add("1", ["lam", "mu"], "lambda != 0", "a1 e_i = lambda e_{i+1}, a2 e_i = e_{i-1}, a3 e_i = mu e_{i-1}", f1)
        add("2", ["lam", "mu"], "lambda != 0", "a1 e_i = lambda e_{i+1}, a2 e_i = mu e_i, a3 e_i = e_{i-1}", f2)
        add("3", ["lam", "mu"], "mu != 0", "a1 e_i = lambda e_{i+1}, a2 e_i = mu e_{i+1}, a3 e_i = e_{i-1}", f3)

    if n == 4:
        def fstd(lam, mu):
            return standard_module(4, [lam, mu])

        def params(lam, mu, nu):
            return [("lambda", as_scalar(lam)), ("mu", as_scalar(mu)), ("nu", as_scalar(nu))]

        def f1(lam, mu, nu):
            _nonzero("lambda", lam)
            return _one_index(4, [(lam, 1), (1, -1), (mu, -1), (nu, -1)], "C4(1)", params(lam, mu, nu))

        def f2(lam, mu, nu):
            _nonzero("lambda", lam)
            return _one_index(4, [(lam, 1), (mu, 0), (1, -1), (nu, -1)], "C4(2)", params(lam, mu, nu))

        def f31(lam, mu, nu):
            _nonzero("mu", mu)
            return _one_index(4, [(lam, 1), (mu, 1), (1, -1), (nu, -1)], "C4(3.1)", params(lam, mu, nu))

        def f32(lam, mu, nu):
            _nonzero("lambda", lam)
            if as_scalar(mu) * as_scalar(nu) != 0:
                raise ConstraintViolation("family (3.2) needs mu * nu = 0")
            return _one_index(4, [(lam, 1), (mu, 0), (nu, 0), (1, -1)], "C4(3.2)", params(lam, mu, nu))

        def f4(lam, mu, nu):
            _nonzero("mu", mu)
            return _one_index(4, [(lam, 1), (mu, 1), (nu, 0), (1, -1)], "C4(4)", params(lam, mu, nu))

        def f5(lam, mu, nu):
            _nonzero("nu", nu)
            return _one_index(4, [(lam, 1), (mu, 1), (nu, 1), (1, -1)], "C4(5)", params(lam, mu, nu))

        add("standard", ["lam", "mu"], "lambda != 0, mu != 0",
            "a1 e_ij = lambda e_{i+1,j+1}, a2 e_ij = mu e_{i,j+1}, a3 e_ij = e_{i,j-1}, a4 e_ij = e_{i-1,j-1}", fstd)
        add("1", ["lam", "mu", "nu"], "lambda != 0",
            "a1 e_i = lambda e_{i+1}, a2 e_i = e_{i-1}, a3 e_i = mu e_{i-1}, a4 e_i = nu e_{i-1}", f1)
        add("2", ["lam", "mu", "nu"], "lambda != 0",
            "a1 e_i = lambda e_{i+1}, a2 e_i = mu e_i, a3 e_i = e_{i-1}, a4 e_i = nu e_{i-1}", f2)
        add("3.1", ["lam", "mu", "nu"], "mu != 0",
            "a1 e_i = lambda e_{i+1}, a2 e_i = mu e_{i+1}, a3 e_i = e_{i-1}, a4 e_i = nu e_{i-1}", f31)
        add("3.2", ["lam", "mu", "nu"], "lambda != 0, mu * nu = 0",
            "a1 e_i = lambda e_{i+1}, a2 e_i = mu e_i, a3 e_i = nu e_i, a4 e_i = e_{i-1}", f32)
        add("4", ["lam", "mu", "nu"], "mu != 0",
            "a1 e_i = lambda e_{i+1}, a2 e_i = mu e_{i+1}, a3 e_i = nu e_i, a4 e_i = e_{i-1}", f4)
        add("5", ["lam", "mu", "nu"], "nu != 0",
            "a1 e_i = lambda e_{i+1}, a2 e_i = mu e_{i+1}, a3 e_i = nu e_{i+1}, a4 e_i = e_{i-1}", f5)
    return fams


def family_catalog(n: int) -> list[Family]:
    """The families of simple modules listed for C_2, C_3 and C_4."""
    if n not in (2, 3, 4):
        raise ValueError(f"no family catalog for n={n}")
    return _family_builders(n)


def family(n: int, fid: str) -> Family:
    for f in family_catalog(n):
        if f.id == fid:
            return f
    raise KeyError(f"no family {fid!r} for n={n}")


# family -> minimal prime contained in the annihilator
FAMILY_PRIME = {
    3: {"1": "P1", "2": "P2", "3": "P3"},
    4: {"1": "P1", "2": "P2", "3.1": "P3", "3.2": "P3", "4": "P4", "5": "P5"},
}


def annihilator_witness(rep: MonomialRep, leaf_branch, box: int) -> Report:
    """Sweep the catalog relations of a leaf over the box of ``rep``."""
    from .diagrams import catalog_entry

    if rep.n != leaf_branch.n:
        raise ValueError("rank mismatch between rep and leaf")
    entry = catalog_entry(leaf_branch.leaf)
    if entry is None:
        raise ValueError(f"leaf {leaf_branch.leaf.render()} has no catalog entry")
    pairs = [(x, y) for _, x, y in entry.relations(rep.n)]
    return verify_word_pairs(rep, pairs, box, name=f"{rep.name} vs {entry.name}")


def annihilator_membership(rep: MonomialRep, leaf_branch, box: int) -> bool:
    """Whether every generating relation of the leaf's prime acts as zero on the box."""
    return annihilator_witness(rep, leaf_branch, box).passed
