"""Boxed, exhaustive and seeded checks of the library's invariants.

Each check returns a :class:`~chinoid.reps.Report`; :func:`run_suite`
bundles the ones that make sense for a given rank.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import core, diagrams, quotients, reps
from .reps import Report

# leaf counts read off the tree pictures for n = 2, 3, 4; larger ranks are
# regression values from enumeration
LEAF_COUNTS = {2: 1, 3: 3, 4: 5, 5: 9, 6: 17, 7: 31, 8: 57}

GENERIC = {"lam": Fraction(2), "mu": Fraction(-3, 2), "nu": Fraction(5, 7)}


def check_canonical_uniqueness(n: int, max_length: int) -> Report:
    report = Report(f"canonical forms n={n} length<={max_length}")
    for length in range(max_length + 1):
        seen = set()
        for cls in core.word_classes(n, length):
            shaped = [w for w in cls if core.is_canonical_word(w, n)]
            report.checked += len(cls)
            if len(shaped) != 1:
                report.fail(cls=[core.format_word(w) for w in sorted(cls)], shaped=len(shaped))
                return report
            target = core.parse_canonical(shaped[0], n)
            if target in seen:
                report.fail(duplicate=target.to_json())
                return report
            seen.add(target)
            for w in cls:
                cf = core.normalize(w, n)
                if cf != target or core.normalize(cf.expand(), n) != cf:
                    report.fail(word=core.format_word(w), got=cf.to_json(), expected=target.to_json())
                    return report
    return report


def check_insertion(n: int, max_degree: int) -> Report:
    report = Report(f"insertion fast path n={n} degree<={max_degree}")
    bad = core.validate_insertion(n, max_degree)
    report.checked = len(core.canonical_forms(n, max_degree)) * n
    if bad:
        x, a, ref, got = bad[0]
        report.fail(form=x.to_json(), letter=a, reference=ref.to_json(), fast=got.to_json())
    return report


def check_tree(n: int) -> Report:
    report = Report(f"tree n={n}")
    first = diagrams.first_level(n)
    report.checked += 1
    if len(first) != 2 * n - 3:
        report.fail(first_level=len(first), expected=2 * n - 3)
        return report
    for branch in diagrams.walk(n):
        d = branch.leaf
        report.checked += 1
        u, v = d.interval
        if d.used != frozenset(range(u, v + 1)):
            report.fail(diagram=d.to_json(), problem="used vertices not contiguous")
            return report
        ends = [x for arc in d.arcs for x in arc]
        if len(ends) != len(set(ends)) or set(ends) & d.dots:
            report.fail(diagram=d.to_json(), problem="vertex in two arcs or arc and dot")
            return report
        # each step's arc encloses everything used before it
        used = set()
        for step in branch.steps:
            if step.kind == "arc" and used and not (step.low < min(used) and step.high > max(used)):
                report.fail(diagram=d.to_json(), problem=f"{step} does not enclose {sorted(used)}")
                return report
            used |= {step.low, step.high}
        if not diagrams.is_leaf(d) and not diagrams.children(d):
            report.fail(diagram=d.to_json(), problem="dead end that is not a leaf")
            return report
    leaves = diagrams.enumerate_leaves(n)
    report.checked += 1
    if n in LEAF_COUNTS and len(leaves) != LEAF_COUNTS[n]:
        report.fail(leaves=len(leaves), expected=LEAF_COUNTS[n])
    return report


def check_prime_catalog(n: int) -> Report:
    report = Report(f"prime catalog n={n}")
    try:
        checks = diagrams.prime_catalog_check(n)
    except diagrams.CatalogMismatch as exc:
        report.fail(error=str(exc), leaves=[c.to_json() for c in exc.report or []])
        return report
    report.checked = sum(c.checked for c in checks)
    return report


def check_shape_relations(n: int) -> Report:
    report = Report(f"shape relations n={n}")
    for branch in diagrams.walk(n):
        for family, pairs in diagrams.shape_relations(branch.leaf).items():
            for x, y in pairs:
                report.checked += 1
                if not quotients.congruent_mod(branch, x, y):
                    report.fail(branch=str(branch), family=family, x=core.format_word(x), y=core.format_word(y))
                    return report
    return report


def check_embedding(n: int, max_length: int) -> Report:
    """Distinct elements of C_n up to a length have distinct leaf images."""
    report = Report(f"leaf images separate C_{n} up to length {max_length}")
    leaves = diagrams.enumerate_leaves(n)
    seen = {}
    for length in range(max_length + 1):
        for cls in core.word_classes(n, length):
            w = min(cls)
            key = tuple(quotients.kappa_key(b, w) for b in leaves)
            report.checked += 1
            if key in seen:
                report.fail(x=core.format_word(seen[key]), y=core.format_word(w))
                return report
            seen[key] = w
    return report


def check_growth(n: int, max_length: int) -> Report:
    """Congruence mod a branch implies congruence mod every extension."""
    report = Report(f"congruences grow along branches n={n}")
    words = [w for L in range(max_length + 1) for w in core.all_words(n, L)]
    for branch in diagrams.walk(n):
        if len(branch.diagrams) < 2:
            continue
        parent = diagrams.Branch(branch.diagrams[:-1])
        groups = {}
        for w in words:
            groups.setdefault(quotients.kappa_key(parent, w), []).append(w)
        for members in groups.values():
            keys = {quotients.kappa_key(branch, w) for w in members}
            report.checked += 1
            if len(keys) != 1:
                report.fail(branch=str(branch), words=[core.format_word(w) for w in members])
                return report
    return report


def sample_parameters(fam: reps.Family) -> list[dict]:
    """Generic values plus every allowed pattern of zeros."""
    if fam.id == "1-dim":
        return [{"c": [Fraction(j + 1, 2) for j in range(fam.n)]}, {"c": [0] * fam.n},
                {"c": [Fraction(3)] + [0] * (fam.n - 1)}]
    out = []
    for zeros in itertools.product([False, True], repeat=len(fam.params)):
        kw = {p: (Fraction(0) if z else GENERIC[p]) for p, z in zip(fam.params, zeros)}
        try:
            fam(**kw)
        except (reps.ConstraintViolation, reps.ZeroParameter):
            continue
        out.append(kw)
    return out


def catalog_reps(n: int) -> list[reps.MonomialRep]:
    return [fam(**kw) for fam in reps.family_catalog(n) for kw in sample_parameters(fam)]


def check_catalog_reps(n: int, box: int) -> list[Report]:
    out = []
    for rep in catalog_reps(n):
        out.append(reps.verify_relations(rep, box))
        out.append(reps.is_monomial(rep, box))
        r = Report(f"zero divisors {rep.name}", checked=1)
        if not reps.zero_divisor_consequence(rep, box):
            r.fail(rep=rep.name)
        out.append(r)
    return out


def check_family_annihilators(n: int, box: int) -> Report:
    report = Report(f"family annihilators n={n}")
    for fam in reps.family_catalog(n):
        prime = reps.FAMILY_PRIME.get(n, {}).get(fam.id)
        if prime is None:
            continue
        leaf = diagrams.leaf_for(n, prime)
        for kw in sample_parameters(fam):
            res = reps.annihilator_witness(fam(**kw), leaf, box)
            report.checked += res.checked
            if not res.passed:
                report.fail(family=fam.id, prime=prime, params={k: str(v) for k, v in kw.items()}, **res.witness)
                return report
    return report


def standard_parameters(n: int) -> list[Fraction]:
    return [Fraction(j + 2, j + 1) * (-1) ** j for j in range(n // 2)]


def check_standard(n: int, box: int, seed: int = reps.DEFAULT_SEED, samples: int = 50) -> list[Report]:
    lams = standard_parameters(n)
    V = reps.standard_module(n, lams)
    out = [reps.verify_relations(V, box), reps.is_monomial(V, box)]
    cases = Report(f"six case identities {V.name}")
    for case, pairs in reps.relation_cases(n).items():
        res = reps.verify_word_pairs(V, pairs, box)
        cases.checked += res.checked
        if not res.passed:
            cases.fail(case=case, **res.witness)
            break
    out.append(cases)
    central = Report(f"central scalars {V.name}", checked=1)
    got = reps.central_scalars(V, box)
    if got != list(enumerate(lams, start=1)):
        central.fail(got=[(i, str(c)) for i, c in got])
    out.append(central)
    reach = Report(f"cyclic reach {V.name} seed={seed:#x}")
    rng = random.Random(seed)
    zero = reps.SparseVector.basis((0,) * V.arity)
    for _ in range(samples):
        v = reps.random_vector(V.arity, rng, box)
        word, c = reps.cyclic_reach(V, v)
        reach.checked += 1
        if c == 0 or reps.act(V, word, v) != zero * c:
            reach.fail(vector=v.to_json(), word=core.format_word(word), scalar=str(c))
            break
    out.append(reach)
    return out


def check_inductive(box: int) -> Report:
    report = Report("inductive construction from Z")
    lams = [Fraction(3), Fraction(-2, 5), Fraction(7, 2)]
    U = reps.z_module(lams[0])
    for k in (1, 2):
        U = reps.inductive_extend(U, lams[k], box)
        V = reps.standard_module(2 * (k + 1), lams[: k + 1])
        for idx in V.box(box):
            for j in range(1, V.n + 1):
                report.checked += 1
                if reps.act_basis(U, (j,), idx) != reps.act_basis(V, (j,), idx):
                    report.fail(n=V.n, generator=j, index=list(idx))
                    return report
        rel = reps.verify_relations(U, box)
        if not rel.passed:
            report.fail(n=U.n, **rel.witness)
            return report
    return report


def mutants(V: reps.MonomialRep):
    """Every single corruption of one scalar or one shift entry of V."""
    for j in range(1, V.n + 1):
        a = V.action(j)
        for c in sorted({a.scalar + 1, a.scalar - 1, Fraction(0), -a.scalar} - {a.scalar}):
            yield f"a{j} scalar {a.scalar}->{c}", V.with_action(j, reps.Action.make(c, a.shift))
        for p in range(V.arity):
            for d in (a.shift[p] - 1, a.shift[p] + 1):
                if -1 <= d <= 1:
                    shift = list(a.shift)
                    shift[p] = d
                    yield (f"a{j} shift[{p}] {a.shift[p]}->{d}",
                           V.with_action(j, reps.Action.make(a.scalar, shift)))


def check_mutations(box: int = 4) -> Report:
    lams = [Fraction(2), Fraction(3)]
    V = reps.standard_module(4, lams)
    expected = list(enumerate(lams, start=1))
    report = Report("mutation sensitivity V(2,3)")
    for label, M in mutants(V):
        report.checked += 1
        if not reps.verify_relations(M, box).passed:
            continue
        try:
            if reps.central_scalars(M, box) != expected:
                continue
        except reps.NotScalar:
            continue
        report.fail(mutant=label)
        return report
    return report


def run_suite(n: int, box: int = 4, seed: int = reps.DEFAULT_SEED) -> list[Report]:
    """All checks that apply at rank n."""
    out = []
    lengths = {1: 8, 2: 8, 3: 6, 4: 5}
    out.append(check_canonical_uniqueness(n, lengths.get(n, 4)))
    out.append(check_insertion(n, {1: 8, 2: 8, 3: 6, 4: 5}.get(n, 4)))
    if n >= 2:
        out.append(check_tree(n))
        out.append(check_shape_relations(n))
        if n <= 4:
            out.append(check_embedding(n, {2: 6, 3: 4, 4: 4}[n]))
            out.append(check_growth(n, 3))
    if n in diagrams.PRIME_CATALOG:
        out.append(check_prime_catalog(n))
    if n in (2, 3, 4):
        out += check_catalog_reps(n, box)
        out.append(check_family_annihilators(n, box))
    if n >= 2 and n % 2 == 0 and n <= 8:
        out += check_standard(n, box, seed)
    if n == 4:
        out.append(check_inductive(box))
        out.append(check_mutations(box))
    return out
