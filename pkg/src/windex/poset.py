"""Finite posets: covers, Hasse diagrams, isomorphism, deterministic export."""
from __future__ import annotations


class Poset:
    def __init__(self, elements, leq, labels=None):
        """`elements` in a fixed order; `leq(a, b)` decides the order relation."""
        self.elements = list(elements)
        n = len(self.elements)
        self._leq = [[bool(leq(a, b)) for b in self.elements] for a in self.elements]
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise ValueError("one label per element")
        for i in range(n):
            if not self._leq[i][i]:
                raise ValueError("order is not reflexive")
            for j in range(n):
                if i != j and self._leq[i][j] and self._leq[j][i]:
                    raise ValueError("order is not antisymmetric")
                for k in range(n):
                    if self._leq[i][j] and self._leq[j][k] and not self._leq[i][k]:
                        raise ValueError("order is not transitive")

    def __len__(self):
        return len(self.elements)

    def leq(self, i, j):
        return self._leq[i][j]

    def covers(self):
        """Pairs (i, j) with i < j and nothing strictly in between."""
        n = len(self.elements)
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not self._leq[i][j]:
                    continue
                if any(k != i and k != j and self._leq[i][k] and self._leq[k][j]
                       for k in range(n)):
                    continue
                out.append((i, j))
        return sorted(out)

    def bottom(self):
        for i in range(len(self.elements)):
            if all(self._leq[i][j] for j in range(len(self.elements))):
                return i
        return None

    def top(self):
        for j in range(len(self.elements)):
            if all(self._leq[i][j] for i in range(len(self.elements))):
                return j
        return None

    # -- isomorphism --------------------------------------------------------

    def _signatures(self):
        """Iterated refinement of node invariants; stable under isomorphism."""
        n = len(self.elements)
        up = [frozenset(j for j in range(n) if self._leq[i][j]) for i in range(n)]
        down = [frozenset(j for j in range(n) if self._leq[j][i]) for i in range(n)]
        sig = [(len(up[i]), len(down[i])) for i in range(n)]
        for _ in range(n):
            nxt = [(sig[i],
                    tuple(sorted(sig[j] for j in up[i])),
                    tuple(sorted(sig[j] for j in down[i])))
                   for i in range(n)]
            # re-encode as small ints to keep the tuples from growing
            codes = {s: c for c, s in enumerate(sorted(set(nxt)))}
            new = [codes[s] for s in nxt]
            if new == sig:
                break
            sig = new
        return sig

    def isomorphic(self, other):
        """Order-isomorphism test; returns a mapping (index list) or None."""
        n = len(self.elements)
        if n != len(other.elements):
            return None
        sa, sb = self._signatures(), other._signatures()
        if sorted(sa) != sorted(sb):
            return None
        candidates = [[j for j in range(n) if sb[j] == sa[i]] for i in range(n)]
        order = sorted(range(n), key=lambda i: len(candidates[i]))
        mapping = [None] * n
        used = [False] * n

        def extend(pos):
            if pos == n:
                return True
            i = order[pos]
            for j in candidates[i]:
                if used[j]:
                    continue
                ok = True
                for prev in order[:pos]:
                    pj = mapping[prev]
                    if (self._leq[i][prev] != other._leq[j][pj]
                            or self._leq[prev][i] != other._leq[pj][j]):
                        ok = False
                        break
                if ok:
                    mapping[i] = j
                    used[j] = True
                    if extend(pos + 1):
                        return True
                    mapping[i] = None
                    used[j] = False
            return False

        return mapping if extend(0) else None

    # -- export -------------------------------------------------------------

    def to_dot(self, name="poset"):
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, lab in enumerate(self.labels):
            lines.append(f'  n{i} [label="{lab}"];')
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self):
        return {
            "nodes": list(self.labels),
            "covers": [[self.labels[i], self.labels[j]] for i, j in self.covers()],
        }


def poset_from_covers(labels, cover_pairs):
    """Build a poset from labels and cover pairs (lo, hi), taking the
    reflexive-transitive closure."""
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for lo, hi in cover_pairs:
        leq[index[lo]][index[hi]] = True
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if leq[i][j]:
                    for k in range(n):
                        if leq[j][k] and not leq[i][k]:
                            leq[i][k] = True
                            changed = True
    return Poset(range(n), lambda a, b: leq[a][b], labels=labels)
