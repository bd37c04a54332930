"""Independent oracles used across the test suite.

Everything here recomputes expected values from first principles, with none
of the incremental machinery of the package: closures run as plain fixpoint
loops, group data comes from explicit permutation tables, and chain
restrictions follow the double-coset counting formula directly.
"""
import itertools

from windex.presentation import indexed_coproduct


def naive_closure(P, gens, bound):
    """Fixpoint closure under units, restriction, and self-indexed
    coproducts, keeping members of at most `bound` points."""
    levels = {V: set() for V in P.orbit_classes}
    for S in gens:
        if P.points(S) <= bound:
            levels[S.over].add(S)
    changed = True
    while changed:
        changed = False
        for V in P.orbit_classes:
            if levels[V] and P.star_vset(V) not in levels[V]:
                levels[V].add(P.star_vset(V))
                changed = True
        for V in P.orbit_classes:
            for S in list(levels[V]):
                for w in P.slice_keys(V):
                    T = P.restrict(w, S)
                    if P.points(T) <= bound and T not in levels[T.over]:
                        levels[T.over].add(T)
                        changed = True
        for V in P.orbit_classes:
            for S in list(levels[V]):
                for combo in _component_choices(P, V, S, levels, bound):
                    U = indexed_coproduct(P, S, combo)
                    if P.points(U) <= bound and U not in levels[V]:
                        levels[V].add(U)
                        changed = True
    return {V: frozenset(mem) for V, mem in levels.items()}


def _component_choices(P, V, S, levels, bound):
    """All component tuples for a coproduct over S whose total size fits in
    `bound` (anything larger would be discarded by the size check anyway)."""
    slots = S.expand()
    pools = [sorted(levels[P.slice_cls(V, k)], key=str) for k in slots]
    if any(not pool for pool in pools):
        return
    weights = [P.slice_points(V, k) for k in slots]

    def walk(i, acc, budget):
        if i == len(slots):
            yield list(acc)
            return
        for T in pools[i]:
            cost = weights[i] * P.points(T)
            if cost <= budget:
                yield from walk(i + 1, acc + [T], budget - cost)

    yield from walk(0, [], bound)


def naive_member(P, gens, S, slack=0):
    """Membership of S in the system generated by `gens`, by brute closure
    up to the size of S (plus optional slack)."""
    bound = max([P.points(S)] + [P.points(g) for g in gens]) + slack
    return S in naive_closure(P, gens, bound)[S.over]


def s3_table():
    """Multiplication table of the symmetric group on three letters, from
    explicit permutations (row acts first)."""
    perms = list(itertools.permutations(range(3)))

    def compose(a, b):
        return tuple(b[a[i]] for i in range(3))

    return [[perms.index(compose(a, b)) for b in perms] for a in perms]


def chain_restrict_oracle(p, v, l, k):
    """Restriction of the orbit C_p^v / C_p^k along C_p^v / C_p^l, counted
    through double cosets of the cyclic chain: p^(v - max(l, k)) copies of
    the orbit at level min(l, k)."""
    return p ** (v - max(l, k)), min(l, k)


def level_sets(W):
    """Sparse levels of a system as a dict of plain sorted lists (printable,
    order-stable)."""
    return {V: sorted(str(S) for S in W.sparse_levels[V])
            for V in W.P.orbit_classes}
