"""Coannulet unions, dense elements, omega filter families and divisors.

omega_F(X) is the union of the coannulets (F : x) over x in X.  Applied
to ideals of the lattice reduct it always yields a filter; the filters
reachable this way form a bounded distributive lattice under inclusion,
with intersection as meet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .bitsets import bits
from .coann import coannulet_table
from .errors import EmptyArgument, ImproperFilter, RepresentationMismatch, UnknownMember
from .filters import all_ideals, canonical_sort, generated_filter, generated_ideal, is_ideal
from .structure import Structure, subset_repr


def omega(s: Structure, f: int, x_set: int) -> int:
    """Union of (f : x) over x in x_set.  Raw mask; a filter when x_set
    is join closed, but not in general."""
    if x_set == 0:
        raise EmptyArgument("omega needs a nonempty subset")
    table = coannulet_table(s, f)
    out = 0
    for x in bits(x_set):
        out |= table[x]
    return out


@dataclass(frozen=True)
class DenseSet:
    base: int
    mask: int


def dense_set(s: Structure, f: int) -> DenseSet:
    """Elements x with (f : x) = f.  Always an ideal of the reduct."""
    table = coannulet_table(s, f)
    mask = sum(1 << x for x in range(s.n) if table[x] == f)
    return DenseSet(base=f, mask=mask)


@dataclass(frozen=True, eq=False)
class OmegaFamily:
    """All filters of the form omega_F(I) for an ideal I.

    Each member is stored with one witness ideal, the union of every
    ideal mapping to it.  That union maps back to the member because
    omega distributes over unions; when it also happens to be an ideal
    it is the largest witness.  If it is not an ideal the construction
    falls back to the largest single witness and records a note.
    """

    structure: Structure
    base: int
    members: tuple[int, ...]
    witnesses: tuple[int, ...]
    notes: tuple[str, ...] = ()
    index: dict[int, int] = field(default_factory=dict, repr=False)

    def __contains__(self, g: int) -> bool:
        return g in self.index

    def position(self, g: int) -> int:
        try:
            return self.index[g]
        except KeyError:
            raise UnknownMember(f"not a member of the family: {g:#x}") from None

    def witness(self, g: int) -> int:
        return self.witnesses[self.position(g)]


@lru_cache(maxsize=None)
def omega_family(s: Structure, f: int) -> OmegaFamily:
    by_member: dict[int, int] = {}
    best_single: dict[int, int] = {}
    for ideal in all_ideals(s):
        h = omega(s, f, ideal)
        by_member[h] = by_member.get(h, 0) | ideal
        prev = best_single.get(h)
        if prev is None or (ideal.bit_count(), ideal) > (prev.bit_count(), prev):
            best_single[h] = ideal
    members = canonical_sort(by_member)
    notes: list[str] = []
    witnesses = []
    for h in members:
        union = by_member[h]
        if is_ideal(s, union) and omega(s, f, union) == h:
            witnesses.append(union)
        else:
            witnesses.append(best_single[h])
            notes.append(
                "witness union is not an ideal for member "
                + subset_repr(s, h)
            )
    fam = OmegaFamily(
        structure=s,
        base=f,
        members=members,
        witnesses=tuple(witnesses),
        notes=tuple(notes),
        index={g: i for i, g in enumerate(members)},
    )
    if f not in fam or s.full not in fam:
        raise RepresentationMismatch("family must contain its base and the carrier")
    return fam


def least_member_above(fam: OmegaFamily, mask: int) -> int:
    """Least member containing mask; exists since members are closed
    under intersection and the carrier is a member."""
    out = fam.structure.full
    for g in fam.members:
        if not (mask & ~g):
            out &= g
    if out not in fam:
        raise RepresentationMismatch(
            "members are not intersection closed above "
            + subset_repr(fam.structure, mask)
        )
    return out


def omega_join(fam: OmegaFamily, g: int, h: int) -> int:
    """Least member above g and h, cross-checked against the ideal-join
    formula on the stored witnesses."""
    s, f = fam.structure, fam.base
    least = least_member_above(fam, g | h)
    via_ideals = omega(s, f, generated_ideal(s, fam.witness(g) | fam.witness(h)))
    if via_ideals != least:
        raise RepresentationMismatch(
            "ideal-join formula disagrees with the least member for "
            + subset_repr(s, g)
            + " and "
            + subset_repr(s, h)
        )
    return least


def divisor(s: Structure, f: int, h: int) -> int:
    """omega_f over the complement of the proper filter h.

    A raw mask in general; a filter whenever h is prime (the complement
    is then join closed).
    """
    if h == s.full:
        raise ImproperFilter("divisor set needs a proper filter")
    return omega(s, f, s.full ^ h)


def sigma(s: Structure, f: int) -> int:
    """Elements whose trivial-base coannulet joins with f to the carrier
    in the filter lattice."""
    table = coannulet_table(s, 1 << s.top)
    out = 0
    for a in range(s.n):
        if generated_filter(s, table[a] | f) == s.full:
            out |= 1 << a
    return out


def witness_ideal_candidate(s: Structure, f: int, h: int) -> int:
    """Diagnostic only: the elements whose coannulet lies inside h.

    This set always contains every witness ideal of h but is not known
    to be an ideal itself; callers must check before relying on it.
    """
    table = coannulet_table(s, f)
    return sum(1 << x for x in range(s.n) if not (table[x] & ~h))


def greatest_omega_within(s: Structure, f: int) -> int | None:
    """Greatest member of the trivial-base family inside f, if one exists."""
    fam = omega_family(s, 1 << s.top)
    inside = [g for g in fam.members if not (g & ~f)]
    best = None
    for g in inside:
        if all(not (h & ~g) for h in inside):
            best = g
            break
    return best
