"""n-prime filters, normality indices, and the equivalence harnesses.

A structure is n-normal with respect to a base filter when no prime
filter above the base contains more than n base-minimal primes.  The
classification has several provably equivalent formulations; each
harness here evaluates all of them independently and reports whether
they agree, so a disagreement is a first-class finding rather than an
exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Any

from .bitsets import bits
from .coann import coannihilator, coannulet_table
from .errors import BadN, ImproperFilter, NotMinimalPrime, RepresentationMismatch, SearchExhausted
from .filters import all_filters, generated_filter
from .omega import divisor, greatest_omega_within, omega_family, omega_join, sigma
from .spectra import is_prime, minimal_primes_over, primes_of
from .structure import Structure, subset_repr


@dataclass(frozen=True)
class EquivalenceVerdict:
    proposition: str
    conditions: tuple[tuple[str, bool], ...]
    agree: bool
    witness: Any = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class NormalityReport:
    base: int
    index: int
    per_prime: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SigmaExtremality:
    applicable: bool
    holds: bool


def _verdict(proposition, labelled, witness=None, notes=()):
    values = [v for _, v in labelled]
    return EquivalenceVerdict(
        proposition=proposition,
        conditions=tuple(labelled),
        agree=all(values) or not any(values),
        witness=witness,
        notes=tuple(notes),
    )


def _pairwise_tuples(items, k, pairpred):
    """Ascending k-tuples of distinct items whose pairs all satisfy pairpred."""
    chosen: list = []

    def rec(start):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for i in range(start, len(items)):
            cand = items[i]
            if all(pairpred(prev, cand) for prev in chosen):
                chosen.append(cand)
                yield from rec(i + 1)
                chosen.pop()

    yield from rec(0)


def n_prime(s: Structure, f: int, n: int) -> bool:
    """True iff f is an intersection of at most n - 1 distinct primes."""
    if n < 2:
        raise BadN("n-prime needs n >= 2")
    if f == s.full:
        raise ImproperFilter("n-prime is defined for proper filters")
    primes = primes_of(s)
    over = [p for p in primes if not (f & ~p)]
    for k in range(1, n):
        for combo in combinations(over, k):
            inter = s.full
            for p in combo:
                inter &= p
            if inter == f:
                return True
    return False


def is_n_prime(s: Structure, f: int, n: int) -> EquivalenceVerdict:
    """Evaluate the four equivalent shapes of n-primeness independently.

    The overall answer is the prime-intersection form; the other three
    quantify over filter tuples and element tuples.  Tuples with a
    repeated entry satisfy every hypothesis trivially, so only distinct
    combinations are scanned.
    """
    if n < 2:
        raise BadN("n-prime needs n >= 2")
    if f == s.full:
        raise ImproperFilter("n-prime is defined for proper filters")
    lat = all_filters(s)
    witness: dict[str, str] = {}

    others = [g for g in lat.filters if g != f]
    bad = next(
        _pairwise_tuples(others, n, lambda a, b: a & b == f), None
    )
    c1 = bad is None
    if bad is not None:
        witness["filters-meeting-at-base"] = ", ".join(subset_repr(s, g) for g in bad)

    not_below = [g for g in lat.filters if g & ~f]
    bad = next(
        _pairwise_tuples(not_below, n, lambda a, b: not (a & b & ~f)), None
    )
    c2 = bad is None
    if bad is not None:
        witness["filters-meeting-below-base"] = ", ".join(
            subset_repr(s, g) for g in bad
        )

    outside = [x for x in range(s.n) if not (f >> x & 1)]
    bad = next(
        _pairwise_tuples(outside, n, lambda a, b: bool(f >> s.join[a][b] & 1)),
        None,
    )
    c3 = bad is None
    if bad is not None:
        witness["elements-pairwise-joined-into-base"] = ", ".join(
            s.names[x] for x in bad
        )

    c4 = n_prime(s, f, n)

    return _verdict(
        "n-prime-characterizations",
        [
            ("no-distinct-filters-meeting-at-base", c1),
            ("no-distinct-filters-meeting-below-base", c2),
            ("no-outside-elements-pairwise-joined-in", c3),
            ("intersection-of-fewer-primes", c4),
        ],
        witness=witness or None,
    )


def normality_report(s: Structure, f: int) -> NormalityReport:
    """Count the base-minimal primes inside each prime above the base.

    The index is the largest count; index 1 means normal with respect
    to the base.
    """
    if f == s.full:
        raise ImproperFilter("normality is measured against a proper filter")
    mins = minimal_primes_over(s, f)
    per = []
    for p in primes_of(s):
        if f & ~p:
            continue
        count = sum(1 for m in mins if not (m & ~p))
        per.append((p, count))
    index = max((c for _, c in per), default=0)
    return NormalityReport(base=f, index=index, per_prime=tuple(per))


def _check_minimal_prime(s: Structure, f: int, m: int) -> None:
    if not is_prime(s, m) or (f & ~m) or divisor(s, f, m) != m:
        raise NotMinimalPrime(subset_repr(s, m) + " is not base-minimal prime")


def separating_elements(s: Structure, f: int, ms) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Witnesses separating distinct base-minimal primes.

    Returns (a, b) with the a_i pairwise joining into the base, a_i
    outside ms[i], and b_i the product of the other a's.  The search is
    exhaustive in lexicographic element order, so the result is
    deterministic; theory guarantees it succeeds.
    """
    ms = tuple(ms)
    k = len(ms)
    if k < 2:
        raise BadN("separation needs at least two minimal primes")
    if len(set(ms)) != k:
        raise ValueError("minimal primes must be distinct")
    for m in ms:
        _check_minimal_prime(s, f, m)

    def search(prefix):
        i = len(prefix)
        if i == k:
            return prefix
        for x in range(s.n):
            if ms[i] >> x & 1:
                continue
            if all(f >> s.join[x][p] & 1 for p in prefix):
                found = search(prefix + (x,))
                if found is not None:
                    return found
        return None

    a = search(())
    if a is None:
        raise SearchExhausted("no separating tuple exists; theory violated")

    b = []
    for i in range(k):
        prod = s.top
        for j in range(k):
            if j != i:
                prod = s.times[prod][a[j]]
        b.append(prod)
    b = tuple(b)

    joined = s.bot
    for x in b:
        joined = s.join[joined][x]
    for i in range(k):
        if not ms[i] >> b[i] & 1:
            raise RepresentationMismatch("separator product escaped its prime")
    if not f >> joined & 1:
        raise RepresentationMismatch("separator join escaped the base filter")
    for i in range(k):
        rest = s.bot
        for j in range(k):
            if j != i:
                rest = s.join[rest][b[j]]
        if coannihilator(s, f, 1 << rest) & ~ms[i]:
            raise RepresentationMismatch("separator coannihilator escaped its prime")
    return a, b


def _pairwise_in(s: Structure, f: int):
    return lambda a, b: bool(f >> s.join[a][b] & 1)


def _element_join(s: Structure, xs) -> int:
    out = s.bot
    for x in xs:
        out = s.join[out][x]
    return out


def _exists_zero_product(s: Structure, cosets) -> bool:
    reach = {x for x in bits(cosets[0])}
    for c in cosets[1:]:
        nxt = set()
        for p in reach:
            row = s.times[p]
            for x in bits(c):
                nxt.add(row[x])
        reach = nxt
    return s.bot in reach


def n_normality_verdict(s: Structure, f: int, n: int) -> EquivalenceVerdict:
    """Evaluate the seven equivalent characterizations of n-normality.

    Tuples of n + 1 objects are indexed 0..n throughout.  Condition one
    joins all n + 1 minimal primes; the variant that joins only n of
    them is evaluated as a diagnostic and any divergence is noted.
    """
    if n < 1:
        raise BadN("n-normality needs n >= 1")
    if f == s.full:
        raise ImproperFilter("n-normality is measured against a proper filter")
    witness: dict[str, str] = {}
    notes: list[str] = []
    mins = minimal_primes_over(s, f)
    over = [p for p in primes_of(s) if not (f & ~p)]
    table = coannulet_table(s, f)

    c1 = True
    printed = True
    for combo in combinations(mins, n + 1):
        union = 0
        for m in combo:
            union |= m
        if generated_filter(s, union) != s.full:
            c1 = False
            witness["minimal-primes-with-small-join"] = ", ".join(
                subset_repr(s, m) for m in combo
            )
        for skip in range(n + 1):
            part = 0
            for i, m in enumerate(combo):
                if i != skip:
                    part |= m
            if generated_filter(s, part) != s.full:
                printed = False
    if printed != c1:
        notes.append(
            "joining n of n+1 minimal primes diverges from joining all of them"
        )

    c2 = normality_report(s, f).index <= n

    c3 = True
    for p in over:
        if not n_prime(s, divisor(s, f, p), n + 1):
            c3 = False
            witness["prime-with-non-prime-divisor-set"] = subset_repr(s, p)
            break

    c4 = True
    c5 = True
    for xs in _pairwise_tuples(list(range(s.n)), n + 1, _pairwise_in(s, f)):
        union = 0
        for x in xs:
            union |= table[x]
        if generated_filter(s, union) != s.full:
            c4 = False
            witness.setdefault(
                "tuple-with-small-coannulet-join",
                ", ".join(s.names[x] for x in xs),
            )
        if not _exists_zero_product(s, [table[x] for x in xs]):
            c5 = False
            witness.setdefault(
                "tuple-without-zero-product-witnesses",
                ", ".join(s.names[x] for x in xs),
            )

    c6 = True
    c7 = True
    for xs in combinations_with_replacement(range(s.n), n + 1):
        total = _element_join(s, xs)
        union = 0
        for i in range(n + 1):
            part = _element_join(s, [x for j, x in enumerate(xs) if j != i])
            union |= table[part]
        rhs = generated_filter(s, union)
        if table[total] != rhs:
            c6 = False
            witness.setdefault(
                "tuple-breaking-coannihilator-join-identity",
                ", ".join(s.names[x] for x in xs),
            )
        if f >> total & 1 and rhs != s.full:
            c7 = False
            witness.setdefault(
                "tuple-breaking-coannihilator-join-implication",
                ", ".join(s.names[x] for x in xs),
            )

    return _verdict(
        "n-normality-characterizations",
        [
            ("minimal-prime-joins-full", c1),
            ("minimal-primes-per-prime-bounded", c2),
            ("divisor-sets-are-n1-prime", c3),
            ("coannulet-joins-full", c4),
            ("zero-product-witnesses-exist", c5),
            ("coannihilator-join-identity", c6),
            ("coannihilator-join-implication", c7),
        ],
        witness=witness or None,
        notes=notes,
    )


def normality_verdict(s: Structure) -> EquivalenceVerdict:
    """The trivial-base, n = 1 specialization of the n-normality harness."""
    inner = n_normality_verdict(s, 1 << s.top, 1)
    return EquivalenceVerdict(
        proposition="normal-structure-characterizations",
        conditions=inner.conditions,
        agree=inner.agree,
        witness=inner.witness,
        notes=inner.notes,
    )


def omega_sublattice_verdict(s: Structure) -> EquivalenceVerdict:
    """Five equivalent readings of when the trivial-base omega filters
    form a sublattice of the filter lattice."""
    triv = 1 << s.top
    fam = omega_family(s, triv)
    members = fam.members
    member_set = set(members)
    witness: dict[str, str] = {}

    c1 = True
    for i, g in enumerate(members):
        for h in members[i:]:
            if omega_join(fam, g, h) == s.full and generated_filter(s, g | h) != s.full:
                c1 = False
                witness["comaximal-in-family-but-not-in-filters"] = (
                    subset_repr(s, g) + ", " + subset_repr(s, h)
                )

    c2 = normality_report(s, triv).index == 1

    unions = {0}
    for g in members:
        unions |= {u | g for u in unions}
    c3 = True
    for u in sorted(unions):
        if generated_filter(s, u) not in member_set:
            c3 = False
            witness["subfamily-join-outside-family"] = subset_repr(s, u)
            break

    c4 = True
    for i, g in enumerate(members):
        for h in members[i:]:
            if generated_filter(s, g | h) not in member_set:
                c4 = False
                witness.setdefault(
                    "pair-join-outside-family",
                    subset_repr(s, g) + ", " + subset_repr(s, h),
                )

    lets = sorted(set(coannulet_table(s, triv)))
    let_set = set(lets)
    c5 = True
    for i, g in enumerate(lets):
        for h in lets[i:]:
            if generated_filter(s, g | h) not in let_set:
                c5 = False
                witness.setdefault(
                    "coannulet-join-outside-coannulets",
                    subset_repr(s, g) + ", " + subset_repr(s, h),
                )

    return _verdict(
        "omega-filters-sublattice-characterizations",
        [
            ("family-comaximal-implies-filter-comaximal", c1),
            ("normal", c2),
            ("arbitrary-joins-stay-in-family", c3),
            ("binary-joins-stay-in-family", c4),
            ("coannulet-joins-stay-in-coannulets", c5),
        ],
        witness=witness or None,
        notes=fam.notes,
    )


def sigma_greatest_check(s: Structure, f: int) -> SigmaExtremality:
    """In normal structures sigma is the greatest omega filter inside f.

    Not applicable when the structure is not normal; the identity is
    still evaluated so callers can record whether it happens to hold.
    """
    applicable = normality_report(s, 1 << s.top).index == 1
    best = greatest_omega_within(s, f)
    holds = best is not None and best == sigma(s, f)
    return SigmaExtremality(applicable=applicable, holds=holds)
