"""The executable law battery.

Every analysis module contributes universally quantified statements that
hold in all finite residuated lattices.  Each one is realized here as a
check that scans a concrete structure exhaustively and either passes or
returns a witness.  Checks are grouped so the command line can run the
filter/spectral/coannihilator laws, the omega laws, or the normality
laws separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable

from . import coann as can
from . import filters as flt
from . import normality as nrm
from . import spectra as spc
from .errors import RepresentationMismatch, SearchExhausted
from .omega import (
    dense_set,
    divisor,
    omega,
    omega_family,
    omega_join,
    sigma,
    witness_ideal_candidate,
)
from .structure import Structure, leq, subset_repr, validate_structure


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    group: str
    passed: bool
    witness: Any = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class VerificationReport:
    structure_name: str
    outcomes: tuple[CheckOutcome, ...]

    @property
    def all_passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def failures(self) -> tuple[CheckOutcome, ...]:
        return tuple(o for o in self.outcomes if not o.passed)

    def notes(self) -> tuple[str, ...]:
        out: list[str] = []
        for o in self.outcomes:
            out.extend(f"{o.name}: {note}" for note in o.notes)
        return tuple(out)


def _fmt(s: Structure, m: int) -> str:
    return subset_repr(s, m)


def _fail(**kw):
    return kw, ()


def _pass(notes=()):
    return None, tuple(notes)


# ---------------------------------------------------------------------------
# core: residuation laws, filters, spectra, coannihilators


def _product_distributes_over_join(s):
    for x in range(s.n):
        tx = s.times[x]
        for y in range(s.n):
            for z in range(s.n):
                if tx[s.join[y][z]] != s.join[tx[y]][tx[z]]:
                    return _fail(x=s.names[x], y=s.names[y], z=s.names[z])
    return _pass()


def _join_of_products_bound(s):
    for x in range(s.n):
        for y in range(s.n):
            for z in range(s.n):
                lhs = s.times[s.join[x][y]][s.join[x][z]]
                if not leq(s, lhs, s.join[x][s.times[y][z]]):
                    return _fail(x=s.names[x], y=s.names[y], z=s.names[z])
    return _pass()


def _order_matches_residuum(s):
    for x in range(s.n):
        for y in range(s.n):
            if leq(s, x, y) != (s.residuum[x][y] == s.top):
                return _fail(x=s.names[x], y=s.names[y])
    return _pass()


def _product_monotone(s):
    for x in range(s.n):
        for y in range(s.n):
            if not leq(s, x, y):
                continue
            for z in range(s.n):
                if not leq(s, s.times[x][z], s.times[y][z]):
                    return _fail(x=s.names[x], y=s.names[y], z=s.names[z])
    return _pass()


def _maximal_filters_are_prime(s):
    primes = set(spc.primes_of(s))
    for m in spc.maximal_filters(s):
        if m not in primes:
            return _fail(maximal=_fmt(s, m))
    return _pass()


def _filter_enumeration_oracle(s):
    fast = flt.all_filters(s).filters
    slow = flt.filters_by_subset_scan(s)
    if fast != slow:
        return _fail(fast=len(fast), scan=len(slow))
    return _pass()


def _ideal_enumeration_oracle(s):
    fast = flt.all_ideals(s)
    slow = flt.ideals_by_subset_scan(s)
    if fast != slow:
        return _fail(fast=len(fast), scan=len(slow))
    return _pass()


def _generated_filter_idempotent(s):
    for x_set in range(1 << s.n):
        once = flt.generated_filter(s, x_set)
        if x_set & ~once or flt.generated_filter(s, once) != once:
            return _fail(generators=_fmt(s, x_set))
    return _pass()


def _filter_extension_antitone(s):
    for f in flt.all_filters(s).filters:
        for x in range(s.n):
            for y in range(s.n):
                if not leq(s, x, y):
                    continue
                if flt.filter_extension(s, f, y) & ~flt.filter_extension(s, f, x):
                    return _fail(base=_fmt(s, f), x=s.names[x], y=s.names[y])
    return _pass()


def _filter_extension_meet_rule(s):
    for f in flt.all_filters(s).filters:
        for x in range(s.n):
            for y in range(s.n):
                both = flt.filter_extension(s, f, x) & flt.filter_extension(s, f, y)
                if both != flt.filter_extension(s, f, s.join[x][y]):
                    return _fail(base=_fmt(s, f), x=s.names[x], y=s.names[y])
    return _pass()


def _filter_extension_join_rule(s):
    for f in flt.all_filters(s).filters:
        for x in range(s.n):
            for y in range(s.n):
                joined = flt.generated_filter(
                    s, flt.filter_extension(s, f, x) | flt.filter_extension(s, f, y)
                )
                if joined != flt.filter_extension(s, f, s.times[x][y]):
                    return _fail(base=_fmt(s, f), x=s.names[x], y=s.names[y])
    return _pass()


def _principal_filters_sublattice(s):
    principal = {flt.principal_filter(s, x) for x in range(s.n)}
    for x in range(s.n):
        for y in range(s.n):
            px, py = flt.principal_filter(s, x), flt.principal_filter(s, y)
            if flt.generated_filter(s, px | py) not in principal:
                return _fail(kind="join", x=s.names[x], y=s.names[y])
            if px & py not in principal:
                return _fail(kind="meet", x=s.names[x], y=s.names[y])
    return _pass()


def _filter_lattice_distributive(s):
    lat = flt.all_filters(s)
    k = len(lat.filters)
    for i in range(k):
        fi = lat.filters[i]
        for j in range(k):
            fj = lat.filters[j]
            for l in range(k):
                fl = lat.filters[l]
                lhs = fi & lat.join(fj, fl)
                rhs = lat.join(fi & fj, fi & fl)
                if lhs != rhs:
                    return _fail(f=_fmt(s, fi), g=_fmt(s, fj), h=_fmt(s, fl))
    return _pass()


def _principal_ideal_meet_rule(s):
    for x in range(s.n):
        for y in range(s.n):
            if s.down[x] & s.down[y] != s.down[s.meet[x][y]]:
                return _fail(x=s.names[x], y=s.names[y])
    return _pass()


def _principal_ideal_join_rule(s):
    for x in range(s.n):
        for y in range(s.n):
            if flt.ideal_join(s, s.down[x], s.down[y]) != s.down[s.join[x][y]]:
                return _fail(x=s.names[x], y=s.names[y])
    return _pass()


def _prime_iff_complement_join_closed(s):
    for f in flt.all_filters(s).filters:
        if spc.is_prime(s, f) != spc.prime_by_complement(s, f):
            return _fail(filter=_fmt(s, f))
    return _pass()


def _spectrum_matches_subset_scan(s):
    scan = tuple(
        f
        for f in flt.filters_by_subset_scan(s)
        if spc.prime_by_complement(s, f)
    )
    if spc.primes_of(s) != scan:
        return _fail(fast=len(spc.primes_of(s)), scan=len(scan))
    return _pass()


def _prime_separation(s):
    for c in spc.join_closed_subsets(s):
        for f in flt.all_filters(s).filters:
            if c & f:
                continue
            p = spc.prime_avoiding(s, f, c)
            if p is None:
                return _fail(separator=_fmt(s, c), filter=_fmt(s, f))
    return _pass()


def _minimal_prime_iff_maximal_complement(s):
    jc = spc.join_closed_subsets(s)
    for f in flt.all_filters(s).filters:
        mins = set(spc.minimal_primes_over(s, f))
        for m in mins:
            comp = s.full ^ m
            if not spc.is_join_closed(s, comp) or comp & f:
                return _fail(minimal=_fmt(s, m), base=_fmt(s, f))
            for c in jc:
                if c != comp and not (comp & ~c) and not (c & f):
                    return _fail(minimal=_fmt(s, m), larger=_fmt(s, c))
        for c in jc:
            if c & f:
                continue
            grows = any(d != c and not (c & ~d) and not (d & f) for d in jc)
            if not grows and (s.full ^ c) not in mins:
                return _fail(maximal_separator=_fmt(s, c), base=_fmt(s, f))
    return _pass()


def _prime_over_set_contains_minimal(s):
    for x_set in range(1 << s.n):
        mins = spc.minimal_primes_over(s, x_set)
        for p in spc.primes_of(s):
            if x_set & ~p:
                continue
            if not any(not (m & ~p) for m in mins):
                return _fail(set=_fmt(s, x_set), prime=_fmt(s, p))
    return _pass()


def _generated_filter_is_prime_intersection(s):
    for x_set in range(1 << s.n):
        if flt.generated_filter(s, x_set) != spc.generated_by_primes(s, x_set):
            return _fail(set=_fmt(s, x_set))
    return _pass()


def _generated_filter_is_minimal_prime_intersection(s):
    for x_set in range(1 << s.n):
        if flt.generated_filter(s, x_set) != spc.generated_by_minimal_primes(s, x_set):
            return _fail(set=_fmt(s, x_set))
    return _pass()


def _coannihilator_is_filter_above_base(s):
    for f in flt.all_filters(s).filters:
        co = can.coann_subset_table(s, f)
        for x_set in range(1 << s.n):
            if f & ~co[x_set] or not flt.is_filter(s, co[x_set]):
                return _fail(base=_fmt(s, f), set=_fmt(s, x_set))
    return _pass()


def _coannihilator_flip_rule(s):
    for f in flt.all_filters(s).filters:
        co = can.coann_subset_table(s, f)
        for x_set in range(1 << s.n):
            cox = co[x_set]
            for y_set in range(1 << s.n):
                if not (x_set & ~co[y_set]) and y_set & ~cox:
                    return _fail(base=_fmt(s, f), x=_fmt(s, x_set), y=_fmt(s, y_set))
    return _pass()


def _coannihilator_full_iff_contained(s):
    for f in flt.all_filters(s).filters:
        co = can.coann_subset_table(s, f)
        for x_set in range(1 << s.n):
            if (co[x_set] == s.full) != (not (x_set & ~f)):
                return _fail(base=_fmt(s, f), set=_fmt(s, x_set))
    return _pass()


def _coannulet_monotone(s):
    for f in flt.all_filters(s).filters:
        table = can.coannulet_table(s, f)
        for x in range(s.n):
            for y in range(s.n):
                if leq(s, x, y) and table[x] & ~table[y]:
                    return _fail(base=_fmt(s, f), x=s.names[x], y=s.names[y])
    return _pass()


def _coannulet_meet_is_product_coannulet(s):
    for f in flt.all_filters(s).filters:
        table = can.coannulet_table(s, f)
        for x in range(s.n):
            for y in range(s.n):
                if table[x] & table[y] != table[s.times[x][y]]:
                    return _fail(base=_fmt(s, f), x=s.names[x], y=s.names[y])
    return _pass()


def _double_coannihilator_join_rule(s):
    for f in flt.all_filters(s).filters:
        table = can.coannulet_table(s, f)
        for x in range(s.n):
            for y in range(s.n):
                lhs = can.coannihilator(s, f, table[x]) & can.coannihilator(s, f, table[y])
                rhs = can.coannihilator(s, f, table[s.join[x][y]])
                if lhs != rhs:
                    return _fail(base=_fmt(s, f), x=s.names[x], y=s.names[y])
    return _pass()


def _coannulet_join_bound(s):
    for f in flt.all_filters(s).filters:
        fam = can.coann_family(s, f)
        table = can.coannulet_table(s, f)
        for x in range(s.n):
            for y in range(s.n):
                in_lattice = flt.generated_filter(s, table[x] | table[y])
                gamma = can.gamma_join(fam, table[x], table[y])
                if in_lattice & ~gamma or gamma != table[s.join[x][y]]:
                    return _fail(base=_fmt(s, f), x=s.names[x], y=s.names[y])
    return _pass()


def _coann_family_boolean(s):
    for f in flt.all_filters(s).filters:
        fam = can.coann_family(s, f)
        members = fam.members
        mset = set(members)
        if f not in mset or s.full not in mset:
            return _fail(base=_fmt(s, f), missing="bounds")
        for g in members:
            comp = can.gamma_complement(fam, g)
            if g & comp != f:
                return _fail(base=_fmt(s, f), member=_fmt(s, g), law="meet-complement")
            if can.gamma_join(fam, g, comp) != s.full:
                return _fail(base=_fmt(s, f), member=_fmt(s, g), law="join-complement")
            if can.gamma_complement(fam, comp) != g:
                return _fail(base=_fmt(s, f), member=_fmt(s, g), law="involution")
            for h in members:
                if g & h not in mset:
                    return _fail(base=_fmt(s, f), law="meet-closure")
        for g in members:
            for h in members:
                for k in members:
                    lhs = g & can.gamma_join(fam, h, k)
                    rhs = can.gamma_join(fam, g & h, g & k)
                    if lhs != rhs:
                        return _fail(base=_fmt(s, f), law="distributivity")
    return _pass()


def _coannulets_form_sublattice(s):
    for f in flt.all_filters(s).filters:
        fam = can.coann_family(s, f)
        lets = set(fam.coannulets)
        for g in fam.coannulets:
            for h in fam.coannulets:
                if g & h not in lets or can.gamma_join(fam, g, h) not in lets:
                    return _fail(base=_fmt(s, f), g=_fmt(s, g), h=_fmt(s, h))
    return _pass()


def _coannihilator_relative_pseudocomplement(s):
    lat = flt.all_filters(s)
    for f in lat.filters:
        co = can.coann_subset_table(s, f)
        for x_set in range(1 << s.n):
            gen = flt.generated_filter(s, x_set)
            best = co[x_set]
            if best & gen & ~f:
                return _fail(base=_fmt(s, f), set=_fmt(s, x_set), law="bound")
            for g in lat.filters:
                if not (g & gen & ~f) and g & ~best:
                    return _fail(base=_fmt(s, f), set=_fmt(s, x_set), larger=_fmt(s, g))
    return _pass()


def _coann_family_matches_subset_scan(s):
    for f in flt.all_filters(s).filters:
        fam = can.coann_family(s, f)
        scan = set(can.coann_subset_table(s, f))
        if set(fam.members) != scan:
            return _fail(base=_fmt(s, f), fast=len(fam.members), scan=len(scan))
    return _pass()


# ---------------------------------------------------------------------------
# omega: coannulet unions, dense sets, families, divisors


def _omega_routes_agree(s):
    for f in flt.all_filters(s).filters:
        table = can.coannulet_table(s, f)
        for x_set in range(1, 1 << s.n):
            fast = omega(s, f, x_set)
            by_member = sum(
                1 << a for a in range(s.n) if table[a] & x_set
            )
            by_def = 0
            for a in range(s.n):
                if any(f >> s.join[x][a] & 1 for x in range(s.n) if x_set >> x & 1):
                    by_def |= 1 << a
            if fast != by_member or fast != by_def:
                return _fail(base=_fmt(s, f), set=_fmt(s, x_set))
    return _pass()


def _omega_contains_base(s):
    for f in flt.all_filters(s).filters:
        for x_set in range(1, 1 << s.n):
            if f & ~omega(s, f, x_set):
                return _fail(base=_fmt(s, f), set=_fmt(s, x_set))
    return _pass()


def _omega_monotone_in_set(s):
    from .bitsets import submasks

    for f in flt.all_filters(s).filters:
        for y_set in range(1, 1 << s.n):
            oy = omega(s, f, y_set)
            for x_set in submasks(y_set):
                if x_set and omega(s, f, x_set) & ~oy:
                    return _fail(base=_fmt(s, f), x=_fmt(s, x_set), y=_fmt(s, y_set))
    return _pass()


def _omega_monotone_in_base(s):
    lat = flt.all_filters(s).filters
    for f in lat:
        for g in lat:
            if f & ~g:
                continue
            for x_set in range(1, 1 << s.n):
                if omega(s, f, x_set) & ~omega(s, g, x_set):
                    return _fail(small=_fmt(s, f), large=_fmt(s, g), set=_fmt(s, x_set))
    return _pass()


def _omega_full_iff_meets_base(s):
    for f in flt.all_filters(s).filters:
        for x_set in range(1, 1 << s.n):
            if (omega(s, f, x_set) == s.full) != bool(f & x_set):
                return _fail(base=_fmt(s, f), set=_fmt(s, x_set))
    return _pass()


def _omega_fixes_base_iff_dense(s):
    for f in flt.all_filters(s).filters:
        dense = dense_set(s, f).mask
        for x_set in range(1, 1 << s.n):
            if (omega(s, f, x_set) == f) != (not (x_set & ~dense)):
                return _fail(base=_fmt(s, f), set=_fmt(s, x_set))
    return _pass()


def _dense_elements_form_ideal(s):
    for f in flt.all_filters(s).filters:
        if not flt.is_ideal(s, dense_set(s, f).mask):
            return _fail(base=_fmt(s, f), dense=_fmt(s, dense_set(s, f).mask))
    return _pass()


def _omega_of_join_closed_is_filter(s):
    for f in flt.all_filters(s).filters:
        for c in spc.join_closed_subsets(s):
            if not flt.is_filter(s, omega(s, f, c)):
                return _fail(base=_fmt(s, f), separator=_fmt(s, c))
    return _pass()


def _omega_properness_equivalences(s):
    for f in flt.all_filters(s).filters:
        for c in spc.join_closed_subsets(s):
            w = omega(s, f, c)
            a = not (f & c)
            b = w != s.full
            d = not (w & c)
            if not (a == b == d):
                return _fail(base=_fmt(s, f), separator=_fmt(s, c))
    return _pass()


def _omega_family_lattice(s):
    notes: list[str] = []
    ideals = flt.all_ideals(s)
    for f in flt.all_filters(s).filters:
        fam = omega_family(s, f)
        notes.extend(fam.notes)
        members = fam.members
        mset = set(members)
        if f not in mset or s.full not in mset:
            return _fail(base=_fmt(s, f), missing="bounds")
        k = len(members)
        for i in range(k):
            for j in range(i, k):
                g, h = members[i], members[j]
                if g & h not in mset:
                    return _fail(base=_fmt(s, f), law="meet-closure")
                if omega(s, f, fam.witnesses[i] & fam.witnesses[j]) != g & h:
                    return _fail(base=_fmt(s, f), law="meet-formula")
        joins = {}
        for i in range(k):
            for j in range(i, k):
                val = omega_join(fam, members[i], members[j])
                joins[(members[i], members[j])] = val
                joins[(members[j], members[i])] = val
        for g in members:
            for h in members:
                for w in members:
                    if g & joins[(h, w)] != joins[(g & h, g & w)]:
                        return _fail(base=_fmt(s, f), law="distributivity")
        values = {ideal: omega(s, f, ideal) for ideal in ideals}
        for i_a in ideals:
            for i_b in ideals:
                lhs = omega(s, f, flt.ideal_join(s, i_a, i_b))
                rhs = joins[(values[i_a], values[i_b])]
                if lhs != rhs:
                    return _fail(
                        base=_fmt(s, f),
                        law="representation-independence",
                        i=_fmt(s, i_a),
                        j=_fmt(s, i_b),
                    )
        for h in members:
            cand = witness_ideal_candidate(s, f, h)
            if not flt.is_ideal(s, cand):
                notes.append(
                    "coannulet preimage of "
                    + _fmt(s, h)
                    + " under base "
                    + _fmt(s, f)
                    + " is not an ideal"
                )
    return _pass(notes)


def _coannulets_inside_omega_family(s):
    for f in flt.all_filters(s).filters:
        fam = omega_family(s, f)
        table = can.coannulet_table(s, f)
        for x in range(s.n):
            if table[x] not in fam:
                return _fail(base=_fmt(s, f), element=s.names[x])
        for x in range(s.n):
            for y in range(s.n):
                if omega_join(fam, table[x], table[y]) != table[s.join[x][y]]:
                    return _fail(base=_fmt(s, f), x=s.names[x], y=s.names[y])
    return _pass()


def _coannulet_join_full_when_base_join(s):
    for f in flt.all_filters(s).filters:
        fam = omega_family(s, f)
        table = can.coannulet_table(s, f)
        for x in range(s.n):
            for y in range(s.n):
                if f >> s.join[x][y] & 1:
                    if omega_join(fam, table[x], table[y]) != s.full:
                        return _fail(base=_fmt(s, f), x=s.names[x], y=s.names[y])
    return _pass()


def _divisor_set_forms(s):
    lat = flt.all_filters(s).filters
    for f in lat:
        table = can.coannulet_table(s, f)
        for h in lat:
            if h == s.full:
                continue
            d = divisor(s, f, h)
            by_escape = sum(1 << a for a in range(s.n) if table[a] & ~h)
            if d != by_escape or f & ~d:
                return _fail(base=_fmt(s, f), filter=_fmt(s, h))
            if (d == s.full) != bool(f & ~h):
                return _fail(base=_fmt(s, f), filter=_fmt(s, h), law="full-iff")
    return _pass()


def _divisor_of_prime_is_omega_member(s):
    for f in flt.all_filters(s).filters:
        fam = omega_family(s, f)
        for p in spc.primes_of(s):
            d = divisor(s, f, p)
            if d not in fam:
                return _fail(base=_fmt(s, f), prime=_fmt(s, p))
            if not (f & ~p) and d & ~p:
                return _fail(base=_fmt(s, f), prime=_fmt(s, p), law="containment")
    return _pass()


def _minimal_prime_divisor_fixpoint(s):
    for f in flt.all_filters(s).filters:
        mins = spc.minimal_primes_over(s, f)
        if not mins:
            continue
        d_base = divisor(s, f, f) if f != s.full else None
        for m in mins:
            if divisor(s, f, m) != m:
                return _fail(base=_fmt(s, f), minimal=_fmt(s, m))
            if d_base is not None and m & ~d_base:
                return _fail(base=_fmt(s, f), minimal=_fmt(s, m), law="inside-base-divisors")
    return _pass()


def _minimal_prime_divisor_trichotomy(s):
    for f in flt.all_filters(s).filters:
        mins = set(spc.minimal_primes_over(s, f))
        table = can.coannulet_table(s, f)
        for p in spc.primes_of(s):
            if f & ~p:
                continue
            b1 = p in mins
            b2 = divisor(s, f, p) == p
            b3 = all(
                bool(p >> x & 1) != (not (table[x] & ~p)) for x in range(s.n)
            )
            if not (b1 == b2 == b3):
                return _fail(base=_fmt(s, f), prime=_fmt(s, p))
    return _pass()


def _minimal_primes_family_comaximal(s):
    for f in flt.all_filters(s).filters:
        fam = omega_family(s, f)
        mins = spc.minimal_primes_over(s, f)
        for m1, m2 in combinations(mins, 2):
            if m1 not in fam or m2 not in fam:
                return _fail(base=_fmt(s, f), minimal=_fmt(s, m1 if m1 not in fam else m2))
            if omega_join(fam, m1, m2) != s.full:
                return _fail(base=_fmt(s, f), first=_fmt(s, m1), second=_fmt(s, m2))
    return _pass()


def _omega_minimal_primes_avoid_set(s):
    for f in flt.all_filters(s).filters:
        for c in spc.join_closed_subsets(s):
            w = omega(s, f, c)
            for m in spc.minimal_primes_over(s, w):
                if m & c:
                    return _fail(base=_fmt(s, f), separator=_fmt(s, c), minimal=_fmt(s, m))
    return _pass()


def _divisor_minimal_primes_inside_prime(s):
    for f in flt.all_filters(s).filters:
        for p in spc.primes_of(s):
            d = divisor(s, f, p)
            for m in spc.minimal_primes_over(s, d):
                if m & ~p:
                    return _fail(base=_fmt(s, f), prime=_fmt(s, p), minimal=_fmt(s, m))
    return _pass()


def _omega_minimal_primes_characterized(s):
    for f in flt.all_filters(s).filters:
        mins_f = spc.minimal_primes_over(s, f)
        for c in spc.join_closed_subsets(s):
            w = omega(s, f, c)
            lhs = set(spc.minimal_primes_over(s, w))
            rhs = {m for m in mins_f if not (m & c)}
            if lhs != rhs:
                return _fail(base=_fmt(s, f), separator=_fmt(s, c))
    return _pass()


def _divisor_minimal_primes_characterized(s):
    for f in flt.all_filters(s).filters:
        mins_f = spc.minimal_primes_over(s, f)
        for p in spc.primes_of(s):
            d = divisor(s, f, p)
            lhs = set(spc.minimal_primes_over(s, d))
            rhs = {m for m in mins_f if not (m & ~p)}
            if lhs != rhs:
                return _fail(base=_fmt(s, f), prime=_fmt(s, p))
    return _pass()


def _omega_is_minimal_prime_intersection(s):
    for f in flt.all_filters(s).filters:
        mins_f = spc.minimal_primes_over(s, f)
        for c in spc.join_closed_subsets(s):
            expected = spc.intersection_of(
                (m for m in mins_f if not (m & c)), s.full
            )
            if omega(s, f, c) != expected:
                return _fail(base=_fmt(s, f), separator=_fmt(s, c))
    return _pass()


def _divisor_is_minimal_prime_intersection(s):
    for f in flt.all_filters(s).filters:
        mins_f = spc.minimal_primes_over(s, f)
        for p in spc.primes_of(s):
            expected = spc.intersection_of(
                (m for m in mins_f if not (m & ~p)), s.full
            )
            if divisor(s, f, p) != expected:
                return _fail(base=_fmt(s, f), prime=_fmt(s, p))
    return _pass()


def _omega_family_matches_filter_scan(s):
    ideals = flt.all_ideals(s)
    for f in flt.all_filters(s).filters:
        fam = omega_family(s, f)
        scan = tuple(
            h
            for h in flt.all_filters(s).filters
            if any(omega(s, f, ideal) == h for ideal in ideals)
        )
        if set(fam.members) != set(scan):
            return _fail(base=_fmt(s, f), fast=len(fam.members), scan=len(scan))
    return _pass()


# ---------------------------------------------------------------------------
# normality


def _n_prime_agreement(s):
    notes: list[str] = []
    n_primes = len(spc.primes_of(s))
    for f in flt.all_filters(s).filters:
        if f == s.full:
            continue
        for n in range(2, n_primes + 2):
            verdict = nrm.is_n_prime(s, f, n)
            notes.extend(verdict.notes)
            if not verdict.agree:
                return _fail(base=_fmt(s, f), n=n, conditions=dict(verdict.conditions))
    return _pass(notes)


def _separating_elements_exist(s):
    for f in flt.all_filters(s).filters:
        if f == s.full:
            continue
        mins = spc.minimal_primes_over(s, f)
        for k in range(2, len(mins) + 1):
            for combo in combinations(mins, k):
                try:
                    nrm.separating_elements(s, f, combo)
                except (SearchExhausted, RepresentationMismatch) as exc:
                    return _fail(base=_fmt(s, f), size=k, error=str(exc))
    return _pass()


def _n_normality_agreement(s):
    notes: list[str] = []
    for f in flt.all_filters(s).filters:
        if f == s.full:
            continue
        top_n = len(spc.minimal_primes_over(s, f)) + 1
        for n in range(1, top_n + 1):
            verdict = nrm.n_normality_verdict(s, f, n)
            notes.extend(
                f"base {_fmt(s, f)}, n={n}: {note}" for note in verdict.notes
            )
            if not verdict.agree:
                return _fail(base=_fmt(s, f), n=n, conditions=dict(verdict.conditions))
    return _pass(notes)


def _normal_agreement(s):
    verdict = nrm.normality_verdict(s)
    if not verdict.agree:
        return _fail(conditions=dict(verdict.conditions))
    return _pass(verdict.notes)


def _omega_sublattice_agreement(s):
    verdict = nrm.omega_sublattice_verdict(s)
    if not verdict.agree:
        return _fail(conditions=dict(verdict.conditions))
    return _pass(verdict.notes)


def _sigma_is_omega_member_within(s):
    fam = omega_family(s, 1 << s.top)
    for f in flt.all_filters(s).filters:
        sg = sigma(s, f)
        if sg not in fam or sg & ~f:
            return _fail(filter=_fmt(s, f), sigma=_fmt(s, sg))
    return _pass()


def _sigma_greatest_when_normal(s):
    if nrm.normality_report(s, 1 << s.top).index != 1:
        holds = all(
            nrm.sigma_greatest_check(s, f).holds
            for f in flt.all_filters(s).filters
        )
        return _pass(
            (
                "structure is not normal; greatest-omega identity skipped "
                f"(holds anyway: {holds})",
            )
        )
    for f in flt.all_filters(s).filters:
        res = nrm.sigma_greatest_check(s, f)
        if not res.holds:
            return _fail(filter=_fmt(s, f))
    return _pass()


# ---------------------------------------------------------------------------
# registry and runner

Check = Callable[[Structure], tuple[Any, tuple[str, ...]]]

CHECKS: tuple[tuple[str, str, Check], ...] = (
    ("core", "product-distributes-over-join", _product_distributes_over_join),
    ("core", "join-of-products-bound", _join_of_products_bound),
    ("core", "order-matches-residuum", _order_matches_residuum),
    ("core", "product-monotone", _product_monotone),
    ("core", "maximal-filters-are-prime", _maximal_filters_are_prime),
    ("core", "filter-enumeration-matches-subset-scan", _filter_enumeration_oracle),
    ("core", "ideal-enumeration-matches-subset-scan", _ideal_enumeration_oracle),
    ("core", "generated-filter-idempotent", _generated_filter_idempotent),
    ("core", "filter-extension-antitone", _filter_extension_antitone),
    ("core", "filter-extension-meet-rule", _filter_extension_meet_rule),
    ("core", "filter-extension-join-rule", _filter_extension_join_rule),
    ("core", "principal-filters-sublattice", _principal_filters_sublattice),
    ("core", "filter-lattice-distributive", _filter_lattice_distributive),
    ("core", "principal-ideal-meet-rule", _principal_ideal_meet_rule),
    ("core", "principal-ideal-join-rule", _principal_ideal_join_rule),
    ("core", "prime-iff-complement-join-closed", _prime_iff_complement_join_closed),
    ("core", "spectrum-matches-subset-scan", _spectrum_matches_subset_scan),
    ("core", "prime-separation", _prime_separation),
    ("core", "minimal-prime-iff-maximal-complement", _minimal_prime_iff_maximal_complement),
    ("core", "prime-over-set-contains-minimal", _prime_over_set_contains_minimal),
    ("core", "generated-filter-is-prime-intersection", _generated_filter_is_prime_intersection),
    (
        "core",
        "generated-filter-is-minimal-prime-intersection",
        _generated_filter_is_minimal_prime_intersection,
    ),
    ("core", "coannihilator-is-filter-above-base", _coannihilator_is_filter_above_base),
    ("core", "coannihilator-flip-rule", _coannihilator_flip_rule),
    ("core", "coannihilator-full-iff-contained", _coannihilator_full_iff_contained),
    ("core", "coannulet-monotone", _coannulet_monotone),
    ("core", "coannulet-meet-is-product-coannulet", _coannulet_meet_is_product_coannulet),
    ("core", "double-coannihilator-join-rule", _double_coannihilator_join_rule),
    ("core", "coannulet-join-bound", _coannulet_join_bound),
    ("core", "coannihilator-family-boolean", _coann_family_boolean),
    ("core", "coannulets-form-sublattice", _coannulets_form_sublattice),
    (
        "core",
        "coannihilator-relative-pseudocomplement",
        _coannihilator_relative_pseudocomplement,
    ),
    ("core", "coannihilator-family-matches-subset-scan", _coann_family_matches_subset_scan),
    ("omega", "omega-routes-agree", _omega_routes_agree),
    ("omega", "omega-contains-base", _omega_contains_base),
    ("omega", "omega-monotone-in-set", _omega_monotone_in_set),
    ("omega", "omega-monotone-in-base", _omega_monotone_in_base),
    ("omega", "omega-full-iff-meets-base", _omega_full_iff_meets_base),
    ("omega", "omega-fixes-base-iff-dense", _omega_fixes_base_iff_dense),
    ("omega", "dense-elements-form-ideal", _dense_elements_form_ideal),
    ("omega", "omega-of-join-closed-is-filter", _omega_of_join_closed_is_filter),
    ("omega", "omega-properness-equivalences", _omega_properness_equivalences),
    ("omega", "omega-family-lattice", _omega_family_lattice),
    ("omega", "coannulets-inside-omega-family", _coannulets_inside_omega_family),
    ("omega", "coannulet-join-full-when-base-join", _coannulet_join_full_when_base_join),
    ("omega", "divisor-set-forms", _divisor_set_forms),
    ("omega", "divisor-of-prime-is-omega-member", _divisor_of_prime_is_omega_member),
    ("omega", "minimal-prime-divisor-fixpoint", _minimal_prime_divisor_fixpoint),
    ("omega", "minimal-prime-divisor-trichotomy", _minimal_prime_divisor_trichotomy),
    ("omega", "minimal-primes-family-comaximal", _minimal_primes_family_comaximal),
    ("omega", "omega-minimal-primes-avoid-set", _omega_minimal_primes_avoid_set),
    ("omega", "divisor-minimal-primes-inside-prime", _divisor_minimal_primes_inside_prime),
    ("omega", "omega-minimal-primes-characterized", _omega_minimal_primes_characterized),
    ("omega", "divisor-minimal-primes-characterized", _divisor_minimal_primes_characterized),
    ("omega", "omega-is-minimal-prime-intersection", _omega_is_minimal_prime_intersection),
    ("omega", "divisor-is-minimal-prime-intersection", _divisor_is_minimal_prime_intersection),
    ("omega", "omega-family-matches-filter-scan", _omega_family_matches_filter_scan),
    ("normality", "n-prime-characterizations-agree", _n_prime_agreement),
    ("normality", "separating-elements-exist", _separating_elements_exist),
    ("normality", "n-normality-characterizations-agree", _n_normality_agreement),
    ("normality", "normal-characterizations-agree", _normal_agreement),
    ("normality", "omega-sublattice-characterizations-agree", _omega_sublattice_agreement),
    ("normality", "sigma-is-omega-member-within", _sigma_is_omega_member_within),
    ("normality", "sigma-greatest-when-normal", _sigma_greatest_when_normal),
)

GROUPS = ("core", "omega", "normality")

AGREEMENT_CHECKS = tuple(
    name for _, name, _fn in CHECKS if name.endswith("-agree")
)


def run_battery(
    s: Structure,
    groups=GROUPS,
    name: str | None = None,
) -> VerificationReport:
    """Run every selected check against a validated structure."""
    report = validate_structure(s)
    if not report.valid:
        raise ValueError(f"structure fails validation: {report.violations[0][0]}")
    wanted = set(groups)
    outcomes = []
    for group, check_name, fn in CHECKS:
        if group not in wanted:
            continue
        try:
            witness, notes = fn(s)
        except (RepresentationMismatch, SearchExhausted) as exc:
            witness, notes = {"error": str(exc)}, ()
        outcomes.append(
            CheckOutcome(
                name=check_name,
                group=group,
                passed=witness is None,
                witness=witness,
                notes=notes,
            )
        )
    return VerificationReport(
        structure_name=name if name is not None else "structure",
        outcomes=tuple(outcomes),
    )
