"""Weak indexing systems: membership, families, the lattice, and closures.

A weak indexing system over an orbital presentation is a collection of
V-sets, one level per orbit class, that is closed under restriction, contains
the terminal V-set whenever its level is nonempty, and is closed under
self-indexed coproducts.  Three representations are used:

* sparse form — the system's sparse members, level by level.  A V-set is
  sparse when its terminal multiplicity is at most one (the double point
  2*star being the one exception), no other orbit repeats, and distinct
  non-terminal orbits admit no maps either way.  Almost essentially unital
  systems are generated by their sparse members, and membership of an
  arbitrary V-set reduces along its isotropy decomposition; everything in
  sparse form is exact.
* generated form — arbitrary generators plus a point bound.  Queries up to
  the bound are decided exactly by saturating the generators; beyond it the
  answer is "indeterminate".
* predicate form — a membership callable with precomputed families, used for
  systems defined by a formula (coinduction, fixed-point conditions).
"""
from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass

from .presentation import VSet, UnsupportedBackend

YES = "yes"
NO = "no"
INDETERMINATE = "indeterminate"


class MixedPresentation(ValueError):
    """Two systems over different orbital presentations were combined."""


class NotClosed(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BoundTooSmall(ValueError):
    pass


class _Escaped(Exception):
    pass


def closure_bound(P, *vsets):
    """Default saturation bound; WINDEX_BOUND overrides it."""
    env = os.environ.get("WINDEX_BOUND")
    if env is not None:
        return int(env)
    biggest = max((P.points(S) for S in vsets), default=0)
    return max(8, 2 * biggest)


# -- sparse V-sets ----------------------------------------------------------


def is_sparse(P, S):
    V = S.over
    star = P.star_key(V)
    if S.orbits == ((star, 2),):
        return True
    if S.mult(star) > 1:
        return False
    nonterminal = [k for k, m in S.orbits if k != star]
    if any(m > 1 for k, m in S.orbits if k != star):
        return False
    for a, b in itertools.combinations(nonterminal, 2):
        if P.slice_hom_exists(V, a, b) or P.slice_hom_exists(V, b, a):
            return False
    return True


def sparse_universe(P, V):
    """All sparse V-sets: the empty set, the point, the double point, and
    antichains of non-terminal orbits with or without a disjoint point."""
    star = P.star_key(V)
    out = [P.empty_vset(V), P.star_vset(V), P.vset(V, [(star, 2)])]
    nonterminal = [k for k in P.slice_keys(V) if k != star]
    for r in range(1, len(nonterminal) + 1):
        for combo in itertools.combinations(nonterminal, r):
            if any(P.slice_hom_exists(V, a, b) or P.slice_hom_exists(V, b, a)
                   for a, b in itertools.combinations(combo, 2)):
                continue
            body = P.vset(V, [(k, 1) for k in combo])
            out.append(body)
            out.append(body + P.star_vset(V))
    return tuple(out)


def sparse_bound(P):
    """Points of the largest sparse V-set anywhere in the presentation."""
    return max(P.points(S) for V in P.orbit_classes for S in sparse_universe(P, V))


def downward_closure(P, classes):
    return frozenset(U for U in P.orbit_classes
                     if any(P.hom_exists(U, V) for V in classes))


# -- saturation -------------------------------------------------------------


def _coproducts(P, S, levels, bound):
    """Self-indexed coproducts over S with components from `levels`,
    total size at most `bound`."""
    V = S.over
    per_key = []
    for k, m in S.orbits:
        pool = sorted(levels[P.slice_cls(V, k)])
        if not pool:
            return
        per_key.append((k, m, P.slice_points(V, k), pool))

    def walk(i, acc, budget):
        if i == len(per_key):
            yield acc
            return
        k, m, weight, pool = per_key[i]

        def choose(count, start, acc2, budget2):
            if count == 0:
                yield from walk(i + 1, acc2, budget2)
                return
            for j in range(start, len(pool)):
                cost = weight * P.points(pool[j])
                if cost <= budget2:
                    yield from choose(count - 1, j,
                                      acc2 + P.induct_vset(V, k, pool[j]),
                                      budget2 - cost)
        yield from choose(m, 0, acc, budget)

    yield from walk(0, P.empty_vset(V), bound)


def saturate(P, gens, bound, escape=None):
    """Close the generators under restriction, units, and self-indexed
    coproducts, keeping every member of at most `bound` points.

    Returns a dict orbit class -> frozenset of members.  The result is the
    full set of members of that size whenever `bound` also covers the
    generators (derivations flatten, so nothing larger is ever needed).

    `escape`, if given, is called on each newly found member; a true return
    aborts the whole saturation with result None (used to reject enumeration
    candidates as soon as a stray sparse member shows up).
    """
    levels = {V: set() for V in P.orbit_classes}
    pending = deque()
    dirty = set()
    by_component_class = {V: set() for V in P.orbit_classes}

    def add(S):
        if P.points(S) > bound:
            return
        if S in levels[S.over]:
            return
        if escape is not None and escape(S):
            raise _Escaped
        levels[S.over].add(S)
        pending.append(S)
        dirty.add(S)
        for T in by_component_class[S.over]:
            dirty.add(T)

    try:
        for g in gens:
            if P.points(g) > bound:
                raise BoundTooSmall(
                    f"generator with {P.points(g)} points exceeds bound {bound}")
            add(g)
        while pending or dirty:
            while pending:
                S = pending.popleft()
                V = S.over
                add(P.star_vset(V))
                for w in P.slice_keys(V):
                    add(P.restrict(w, S))
                for k, _ in S.orbits:
                    by_component_class[P.slice_cls(V, k)].add(S)
            batch, dirty = dirty, set()
            for S in sorted(batch):
                for result in _coproducts(P, S, levels, bound):
                    add(result)
    except _Escaped:
        return None
    return {V: frozenset(mem) for V, mem in levels.items()}


def sparse_part(P, levels):
    return {V: frozenset(S for S in mem if is_sparse(P, S))
            for V, mem in levels.items()}


# -- isotropy decomposition --------------------------------------------------


@dataclass(frozen=True)
class SparseDecomposition:
    reduced: VSet          # the sparse reduced-isotropy set
    retraction: dict       # orbit key of S -> orbit key of `reduced` it maps to
    pieces: tuple          # components aligned with reduced.expand()


def sparse_decompose(P, S):
    """Write S as a coproduct over a sparse V-set.

    Orbits connected by slice maps are merged (the earliest mergeable orbit
    folds into the smallest available target) until the non-terminal orbits
    form an antichain; the component at a surviving orbit collects everything
    that folded into it, rewritten over its class.  Always:
    ``indexed_coproduct(P, d.reduced, d.pieces) == S``.
    """
    V = S.over
    star = P.star_key(V)
    key_order = {k: i for i, k in enumerate(P.slice_keys(V))}
    star_count = S.mult(star)
    nonterminal = [k for k, _ in S.orbits if k != star]

    if not nonterminal:
        # pure fold: n copies of the point
        if star_count == 0:
            return SparseDecomposition(P.empty_vset(V), {}, ())
        if star_count == 1:
            return SparseDecomposition(P.star_vset(V), {star: star},
                                       (P.star_vset(V),))
        double = P.vset(V, [(star, 2)])
        return SparseDecomposition(
            double, {star: star},
            (P.star_vset(V), P.star_vset(V).scale(star_count - 1)))

    survivors = list(nonterminal)
    target = {k: k for k in nonterminal}
    while True:
        merged = False
        for a in sorted(survivors, key=key_order.get):
            candidates = [b for b in survivors
                          if b != a and P.slice_hom_exists(V, a, b)]
            if candidates:
                w = min(candidates, key=key_order.get)
                survivors.remove(a)
                for k, t in target.items():
                    if t == a:
                        target[k] = w
                merged = True
                break
        if not merged:
            break

    reduced_pairs = [(k, 1) for k in survivors]
    retraction = dict(target)
    if star_count:
        reduced_pairs.append((star, 1))
        retraction[star] = star
    reduced = P.vset(V, reduced_pairs)

    pieces = []
    for w in reduced.expand():
        if w == star:
            pieces.append(P.star_vset(V).scale(star_count))
            continue
        W = P.slice_cls(V, w)
        acc = P.empty_vset(W)
        for k, m in S.orbits:
            if k == star or target[k] != w:
                continue
            x = next(x for x in P.slice_keys(W) if P.induct_key(V, w, x) == k)
            acc = acc + P.orbit_vset(W, x, m)
        pieces.append(acc)
    return SparseDecomposition(reduced, retraction, tuple(pieces))


# -- the system class --------------------------------------------------------


class WeakIndexingSystem:
    """One weak indexing system, in sparse, generated, or predicate form."""

    def __init__(self, P, form, sparse_levels=None, gens=None, bound=None,
                 predicate=None, families=None, label=None):
        self.P = P
        self.form = form
        self.sparse_levels = sparse_levels
        self.gens = gens
        self.bound = bound
        self.predicate = predicate
        self._families = families
        self.label = label
        self._member_cache = {}
        self._saturation = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_sparse(cls, P, levels, validate=True, label=None):
        """A system given by its sparse members.

        Validation checks that every input is sparse, that the inputs are
        exactly the sparse members of the system they generate, and that the
        result is almost essentially unital (which is what makes the sparse
        data a faithful description).
        """
        full = {V: frozenset(levels.get(V, ())) for V in P.orbit_classes}
        if validate:
            for V, mem in full.items():
                for S in mem:
                    if S.over != V:
                        raise NotClosed(f"{S} filed under level {V!r}", witness=S)
                    if not is_sparse(P, S):
                        raise NotClosed(f"{S} is not sparse", witness=S)
            gens = [S for mem in full.values() for S in mem]
            bound = max(sparse_bound(P), 2)
            sat = saturate(P, gens, bound)
            got = sparse_part(P, sat)
            for V in P.orbit_classes:
                extra = got[V] - full[V]
                if extra:
                    raise NotClosed(
                        f"sparse data is not closed: level {V!r} also "
                        f"generates {sorted(extra)[0]}", witness=sorted(extra)[0])
            eps = _eps_of_sparse(P, full)
            unit = frozenset(V for V, mem in full.items() if P.empty_vset(V) in mem)
            if eps != unit:
                raise NotClosed(
                    "sparse data generates a system that is not almost "
                    f"essentially unital (eps {sorted(eps)} vs unit {sorted(unit)})",
                    witness=None)
        return cls(P, "sparse", sparse_levels=full, label=label)

    @classmethod
    def from_generators(cls, P, gens, bound=None, label=None):
        gens = tuple(gens)
        for g in gens:
            if g.over not in P._slices:
                raise MixedPresentation(f"generator over unknown class {g.over!r}")
        biggest = max((P.points(g) for g in gens), default=0)
        if bound is None:
            bound = max(closure_bound(P, *gens), sparse_bound(P))
        if bound < biggest:
            raise BoundTooSmall(
                f"bound {bound} is below the largest generator ({biggest} points)")
        return cls(P, "generated", gens=gens, bound=max(bound, 2), label=label)

    @classmethod
    def from_predicate(cls, P, predicate, families=None, label=None):
        return cls(P, "predicate", predicate=predicate, families=families,
                   label=label)

    # -- membership ---------------------------------------------------------

    def member(self, S):
        """Trivalent membership: "yes", "no", or "indeterminate"."""
        if S.over not in self.P._slices:
            raise MixedPresentation(f"query over unknown class {S.over!r}")
        hit = self._member_cache.get(S)
        if hit is None:
            hit = self._member_uncached(S)
            self._member_cache[S] = hit
        return hit

    def _member_uncached(self, S):
        P = self.P
        if self.form == "sparse":
            if is_sparse(P, S):
                return YES if S in self.sparse_levels[S.over] else NO
            d = sparse_decompose(P, S)
            if d.reduced not in self.sparse_levels[S.over]:
                return NO
            return YES if all(self.member(p) == YES for p in d.pieces) else NO
        if self.form == "generated":
            if P.points(S) > self.bound:
                return INDETERMINATE
            if self._saturation is None:
                self._saturation = saturate(P, self.gens, self.bound)
            return YES if S in self._saturation[S.over] else NO
        return self.predicate(S)

    # -- derived data ---------------------------------------------------------

    def sparse(self):
        """The sparse members, by level (exactly the data of a sparse form)."""
        if self.form == "sparse":
            return dict(self.sparse_levels)
        out = {}
        for V in self.P.orbit_classes:
            out[V] = frozenset(S for S in sparse_universe(self.P, V)
                               if self.member(S) == YES)
        return out

    def families(self):
        """The color, unit, fold, and one-extra-orbit families of the system."""
        if self._families is not None:
            return dict(self._families)
        P = self.P
        if self.form == "sparse":
            levels = self.sparse_levels
            fams = {
                "color": frozenset(V for V, mem in levels.items() if mem),
                "unit": frozenset(V for V, mem in levels.items()
                                  if P.empty_vset(V) in mem),
                "fold": frozenset(V for V, mem in levels.items()
                                  if P.vset(V, [(P.star_key(V), 2)]) in mem),
                "eps": _eps_of_sparse(P, levels),
            }
        elif self.form == "generated":
            if self._saturation is None:
                self._saturation = saturate(P, self.gens, self.bound)
            levels = self._saturation
            fams = {
                "color": frozenset(V for V, mem in levels.items() if mem),
                "unit": frozenset(V for V, mem in levels.items()
                                  if P.empty_vset(V) in mem),
                "fold": frozenset(V for V, mem in levels.items()
                                  if P.vset(V, [(P.star_key(V), 2)]) in mem),
                "eps": downward_closure(P, [
                    V for V, mem in levels.items()
                    if any(S != P.star_vset(V) for S in mem)]),
            }
        else:
            sp = self.sparse()
            fams = {
                "color": frozenset(V for V in P.orbit_classes
                                   if self.member(P.star_vset(V)) == YES),
                "unit": frozenset(V for V in P.orbit_classes
                                  if self.member(P.empty_vset(V)) == YES),
                "fold": frozenset(
                    V for V in P.orbit_classes
                    if self.member(P.vset(V, [(P.star_key(V), 2)])) == YES),
                "eps": _eps_of_sparse(P, sp),
            }
        self._families = fams
        return dict(fams)

    def members_up_to(self, V, bound):
        """Every member over V with at most `bound` points."""
        if self.form == "generated" and bound > self.bound:
            raise BoundTooSmall(
                f"cannot enumerate members up to {bound} with bound {self.bound}")
        return [S for S in self.P.vsets_up_to(V, bound) if self.member(S) == YES]

    def __eq__(self, other):
        if not isinstance(other, WeakIndexingSystem):
            return NotImplemented
        if self.P.key != other.P.key:
            return False
        if self.form == "sparse" and other.form == "sparse":
            return self.sparse_levels == other.sparse_levels
        return self is other

    def __hash__(self):
        if self.form == "sparse":
            return hash((self.P.key,
                         tuple(sorted((V, tuple(sorted(mem)))
                                      for V, mem in self.sparse_levels.items()))))
        return id(self)

    def __repr__(self):
        tag = self.label or self.form
        return f"<WeakIndexingSystem {tag} over {self.P.key}>"


def _eps_of_sparse(P, levels):
    nontrivial = [V for V, mem in levels.items()
                  if any(S != P.star_vset(V) for S in mem)]
    return downward_closure(P, nontrivial)


# -- module-level operations ---------------------------------------------


def member(W, S):
    return W.member(S)


def families(W):
    return W.families()


def classify(W):
    fam = W.families()
    everything = frozenset(W.P.orbit_classes)
    one_color = fam["color"] == everything
    unital = fam["unit"] == everything
    ae_unital = fam["eps"] == fam["unit"]
    return {
        "one_color": one_color,
        "unital": unital,
        "aE_unital": ae_unital,
        "almost_unital": ae_unital and one_color,
        "indexing": unital and fam["fold"] == everything,
    }


def _check_same_presentation(W1, W2):
    if W1.P.key != W2.P.key:
        raise MixedPresentation(
            f"systems over {W1.P.key} and {W2.P.key} cannot be combined")


def _generators_of(W):
    if W.form == "sparse":
        return [S for mem in W.sparse_levels.values() for S in mem]
    if W.form == "generated":
        return list(W.gens)
    raise UnsupportedBackend(
        "a predicate-form system has no generators; use sparse_extract first")


def leq(W1, W2):
    """Trivalent containment test."""
    _check_same_presentation(W1, W2)
    if W1.form == "sparse" and W2.form == "sparse":
        return YES if all(W1.sparse_levels[V] <= W2.sparse_levels[V]
                          for V in W1.P.orbit_classes) else NO
    verdicts = {W2.member(g) for g in _generators_of(W1)}
    if NO in verdicts:
        return NO
    if INDETERMINATE in verdicts:
        return INDETERMINATE
    return YES


def join(W1, W2):
    _check_same_presentation(W1, W2)
    P = W1.P
    if W1.form == "sparse" and W2.form == "sparse":
        gens = [S for V in P.orbit_classes
                for S in (W1.sparse_levels[V] | W2.sparse_levels[V])]
        sat = saturate(P, gens, max(sparse_bound(P), 2))
        return WeakIndexingSystem.from_sparse(P, sparse_part(P, sat),
                                              validate=False)
    gens = _generators_of(W1) + _generators_of(W2)
    bounds = [W.bound for W in (W1, W2) if W.form == "generated"]
    return WeakIndexingSystem.from_generators(
        P, gens, bound=max(bounds) if bounds else None)


def meet(W1, W2):
    _check_same_presentation(W1, W2)
    P = W1.P
    if W1.form == "sparse" and W2.form == "sparse":
        levels = {V: W1.sparse_levels[V] & W2.sparse_levels[V]
                  for V in P.orbit_classes}
        return WeakIndexingSystem.from_sparse(P, levels, validate=False)
    bound = min(W.bound for W in (W1, W2) if W.form == "generated")
    gens = []
    for V in P.orbit_classes:
        for S in P.vsets_up_to(V, bound):
            if W1.member(S) == YES and W2.member(S) == YES:
                gens.append(S)
    return WeakIndexingSystem.from_generators(P, gens, bound=bound)


def sparse_extract(W):
    """The sparse members of W, plus whether they describe W faithfully.

    Faithful means the system is almost essentially unital and no membership
    query came back indeterminate; then the result is an exact sparse form.
    Otherwise the (still correct) sparse members are returned as a generated
    form, which underapproximates W.
    """
    if W.form == "sparse":
        return W, True
    P = W.P
    levels = {}
    exact = True
    for V in P.orbit_classes:
        keep = []
        for S in sparse_universe(P, V):
            r = W.member(S)
            if r == YES:
                keep.append(S)
            elif r == INDETERMINATE:
                exact = False
        levels[V] = frozenset(keep)
    if exact:
        fam = W.families()
        exact = fam["eps"] == fam["unit"]
    if exact:
        return WeakIndexingSystem.from_sparse(P, levels, validate=False), True
    gens = [S for mem in levels.values() for S in mem]
    return WeakIndexingSystem.from_generators(P, gens), False


def sparse_generate(P, levels):
    """Build the system generated by the given sparse members, validating
    that they are closed (raises NotClosed with a witness otherwise)."""
    return WeakIndexingSystem.from_sparse(P, levels, validate=True)


# -- axiom report -----------------------------------------------------------


def validate_wic(W, bound=None):
    """Check the closure/coefficient axioms on all members up to `bound`.

    Returns a dict of named checks to (ok, witness-or-note).  The Segal
    condition holds by construction for collections of V-sets and is
    reported as such.
    """
    P = W.P
    if bound is None:
        bound = max(sparse_bound(P), 4)
        if W.form == "generated":
            bound = min(bound, W.bound)
    out = {}
    members = {V: W.members_up_to(V, bound) for V in P.orbit_classes}

    witness = None
    for V in P.orbit_classes:
        for S in members[V]:
            for w in P.slice_keys(V):
                if W.member(P.restrict(w, S)) != YES:
                    witness = (S, w)
                    break
    out["restriction-stable"] = (witness is None, witness)

    out["segal"] = (True, "holds by representation: levels are plain sets of V-sets")

    fam = W.families()
    everything = frozenset(P.orbit_classes)
    missing = sorted(everything - fam["color"])
    out["one-color"] = (not missing, missing or None)

    def submultisets_member(S, skip_full):
        from .presentation import sub_multisets
        for T in sub_multisets(S):
            if skip_full and T == S:
                continue
            if W.member(T) != YES:
                return T
        return None

    witness = None
    for V in P.orbit_classes:
        for S in members[V]:
            if S == P.star_vset(V):
                continue
            bad = submultisets_member(S, skip_full=True)
            if bad is not None:
                witness = (S, bad)
                break
    out["summand-closed-nontrivial"] = (witness is None, witness)

    witness = None
    for V in P.orbit_classes:
        for S in members[V]:
            bad = submultisets_member(S, skip_full=True)
            if bad is not None:
                witness = (S, bad)
                break
    out["summand-closed"] = (witness is None, witness)

    witness = None
    for V in P.orbit_classes:
        for n in range(bound + 1):
            if W.member(P.star_vset(V).scale(n)) != YES:
                witness = (V, n)
                break
    out["all-folds"] = (witness is None, witness)
    return out


# -- named systems -----------------------------------------------------------


def _family_or_all(P, family):
    if family is None:
        return frozenset(P.orbit_classes)
    fam = frozenset(family)
    for V in fam:
        if V not in P._slices:
            raise MixedPresentation(f"unknown orbit class {V!r}")
    if downward_closure(P, fam) != fam:
        raise ValueError(f"{sorted(fam)} is not downward closed")
    return fam


def f_trivial(P, family=None):
    """Only the terminal V-set, on the given family of levels."""
    fam = _family_or_all(P, family)
    levels = {V: frozenset([P.star_vset(V)]) if V in fam else frozenset()
              for V in P.orbit_classes}
    return WeakIndexingSystem.from_sparse(P, levels, validate=False,
                                          label=f"F^triv[{','.join(sorted(fam))}]")


def f_zero(P, family=None):
    """The terminal and empty V-sets, on the given family of levels."""
    fam = _family_or_all(P, family)
    levels = {V: frozenset([P.star_vset(V), P.empty_vset(V)])
              if V in fam else frozenset() for V in P.orbit_classes}
    return WeakIndexingSystem.from_sparse(P, levels, validate=False,
                                          label=f"F^0[{','.join(sorted(fam))}]")


def f_infinity(P, family=None):
    """All fold maps (every multiple of the point), on the given family."""
    fam = _family_or_all(P, family)
    levels = {}
    for V in P.orbit_classes:
        if V in fam:
            levels[V] = frozenset([P.empty_vset(V), P.star_vset(V),
                                   P.vset(V, [(P.star_key(V), 2)])])
        else:
            levels[V] = frozenset()
    return WeakIndexingSystem.from_sparse(P, levels, validate=False,
                                          label=f"F^inf[{','.join(sorted(fam))}]")


def f_complete(P, family=None):
    """Everything, on the given family of levels."""
    fam = _family_or_all(P, family)
    levels = {V: frozenset(sparse_universe(P, V)) if V in fam else frozenset()
              for V in P.orbit_classes}
    return WeakIndexingSystem.from_sparse(P, levels, validate=False,
                                          label=f"F[{','.join(sorted(fam))}]")


def e_system(P, family, W):
    """Regard a system supported on the family as a system over all of P.

    The levels outside the family must already be empty; the operation is
    then the identity on representations."""
    fam = _family_or_all(P, family)
    outside = W.families()["color"] - fam
    if outside:
        raise ValueError(
            f"system has nonempty levels outside the family: {sorted(outside)}")
    return W


def bor_system(P, family, W):
    """Truncate a system to the family: levels outside it are emptied."""
    fam = _family_or_all(P, family)
    if W.form == "sparse":
        levels = {V: (W.sparse_levels[V] if V in fam else frozenset())
                  for V in P.orbit_classes}
        return WeakIndexingSystem.from_sparse(P, levels, validate=False)
    if W.form == "generated":
        gens = [S for V in fam for S in W.members_up_to(V, W.bound)]
        return WeakIndexingSystem.from_generators(P, gens, bound=W.bound)

    def pred(S):
        return W.member(S) if S.over in fam else NO

    fams = W.families()
    trimmed = {
        "color": fams["color"] & fam,
        "unit": fams["unit"] & fam,
        "fold": fams["fold"] & fam,
        # nontrivial levels inside the family, closed back down
        "eps": downward_closure(P, fams["eps"] & fam),
    }
    return WeakIndexingSystem.from_predicate(P, pred, families=trimmed)


def f_perp_nu(P, family):
    """V-sets that either live over the family or contain an orbit whose
    class lies outside it."""
    fam = _family_or_all(P, family)
    everything = frozenset(P.orbit_classes)

    def pred(S):
        if S.over in fam:
            return YES
        if any(P.slice_cls(S.over, k) not in fam for k, _ in S.orbits):
            return YES
        return NO

    fams = {"color": everything, "unit": fam, "fold": everything,
            "eps": everything}
    return WeakIndexingSystem.from_predicate(
        P, pred, families=fams, label=f"F_perp_nu[{','.join(sorted(fam))}]")


# -- slice restriction and coinduction ---------------------------------------


def slice_restrict_wis(W, V):
    """Restrict a system to the slice over V (levels reindexed by the
    orbits of the slice)."""
    P = W.P
    Q = P.slice_presentation(V)
    sp, exact = sparse_extract(W)
    if not exact:
        raise UnsupportedBackend(
            "slice restriction needs a faithfully sparse system")
    levels = {u: frozenset(VSet(u, S.orbits)
                           for S in sp.sparse_levels[P.slice_cls(V, u)])
              for u in P.slice_keys(V)}
    return WeakIndexingSystem.from_sparse(Q, levels, validate=False)


def coinduce_wis(P, V, I):
    """Right adjoint to slice restriction at V.

    A U-set S belongs when, for every map-class a over U and every orbit b
    over V with the same underlying class, the restriction of S along a lies
    in the level of b."""
    Q = P.slice_presentation(V)
    if I.P.key != Q.key:
        raise MixedPresentation(
            f"expected a system over the slice at {V!r} of {P.key}")

    matches = {}
    for U in P.orbit_classes:
        pairs = []
        for a in P.slice_keys(U):
            cls_a = P.slice_cls(U, a)
            bs = [b for b in P.slice_keys(V) if P.slice_cls(V, b) == cls_a]
            if bs:
                pairs.append((a, bs))
        matches[U] = pairs

    def pred(S):
        U = S.over
        saw_indeterminate = False
        for a, bs in matches[U]:
            R = P.restrict(a, S)
            for b in bs:
                r = I.member(VSet(b, R.orbits))
                if r == NO:
                    return NO
                if r == INDETERMINATE:
                    saw_indeterminate = True
        return INDETERMINATE if saw_indeterminate else YES

    W = WeakIndexingSystem.from_predicate(P, pred, label=f"CoInd_{V}")

    fams = {
        "color": frozenset(U for U in P.orbit_classes
                           if pred(P.star_vset(U)) == YES),
        "unit": frozenset(U for U in P.orbit_classes
                          if pred(P.empty_vset(U)) == YES),
        "fold": frozenset(U for U in P.orbit_classes
                          if pred(P.vset(U, [(P.star_key(U), 2)])) == YES),
    }
    fams["eps"] = _eps_of_sparse(P, W.sparse())
    W._families = fams
    return W


# -- multiplicative hull -------------------------------------------------------


def multiplicative_hull(W, component_bound=4):
    """Arities along which the system is closed under indexed products.

    A sparse S is admissible when every indexed product over S of members
    (components tested up to `component_bound` points) stays in the system.
    The admissible sparse sets form the hull, validated as a closed sparse
    family.  Needs a group-backed presentation for honest products.
    """
    from . import gsets

    P = W.P
    gsets.require_group(P)
    pools = {V: W.members_up_to(V, component_bound) for V in P.orbit_classes}
    levels = {}
    for V in P.orbit_classes:
        keep = []
        for S in sparse_universe(P, V):
            classes = [P.slice_cls(V, k) for k in S.expand()]
            ok = True
            for combo in itertools.product(*(pools[c] for c in classes)):
                prod = gsets.indexed_product(P, S, list(combo))
                if W.member(prod) != YES:
                    ok = False
                    break
            if ok:
                keep.append(S)
        levels[V] = frozenset(keep)
    return sparse_generate(P, levels)
