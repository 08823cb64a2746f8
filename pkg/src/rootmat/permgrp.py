"""Permutation groups via a deterministic Schreier-Sims construction.

Permutations are tuples ``p`` of length ``degree`` acting on points
``0..degree-1`` by ``x -> p[x]``.  Composition ``compose(p, q)`` means
"q first, then p".  The BSGS gives exact (big integer) group order,
membership, subgroup and equality tests; everything is deterministic
(base points picked as the smallest moved point unless a hint is given,
orbits extended in FIFO order).
"""

from __future__ import annotations

from math import prod


def identity(degree):
    return tuple(range(degree))


def compose(p, q):
    """(p . q)(x) = p(q(x))."""
    return tuple(p[x] for x in q)


def inverse(p):
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def is_identity(p):
    return all(p[x] == x for x in range(len(p)))


def perm_from_cycles(degree, cycles):
    """Build a permutation from a list of cycles, e.g. [[0, 1, 2], [3, 4]]."""
    p = list(range(degree))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            p[x] = cyc[(i + 1) % len(cyc)]
    return tuple(p)


def cycle_notation(p) -> str:
    seen = set()
    parts = []
    for x in range(len(p)):
        if x in seen or p[x] == x:
            continue
        cyc = [x]
        y = p[x]
        while y != x:
            seen.add(y)
            cyc.append(y)
            y = p[y]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


class PermGroup:
    """A permutation group with a base and strong generating set.

    Implements the classic deterministic Schreier-Sims procedure: work at
    the deepest incomplete level, sift Schreier generators through the
    levels below, and restart at the level where a residue survives.
    Transversals are extend-only, so coset representatives never change
    once computed and each (orbit point, generator) pair is processed at
    most once per level.
    """

    def __init__(self, degree, generators, base_hint=()):
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
        self._hint = list(base_hint)
        self.base = []
        self._gens = []  # _gens[i]: strong generators fixing base[:i]
        self._orbits = []  # insertion-ordered orbit of base[i]
        self._trans = []  # point -> rep mapping base[i] to point
        self._done = []  # processed (point, gen index) Schreier pairs
        self._build()

    # -- construction ----------------------------------------------------

    def _new_base_point(self, g):
        for b in self._hint:
            if g[b] != b:
                return b
        for x in range(self.degree):
            if g[x] != x:
                return x
        raise AssertionError("tried to pick a base point for the identity")

    def _append_level(self, point):
        self.base.append(point)
        self._gens.append([])
        self._orbits.append([point])
        self._trans.append({point: identity(self.degree)})
        self._done.append(set())

    def _extend_transversal(self, i):
        orbit, trans, gens = self._orbits[i], self._trans[i], self._gens[i]
        idx = 0
        while idx < len(orbit):
            x = orbit[idx]
            tx = trans[x]
            for s in gens:
                y = s[x]
                if y not in trans:
                    trans[y] = compose(s, tx)
                    orbit.append(y)
            idx += 1

    def _strip(self, p, start=0):
        for i in range(start, len(self.base)):
            x = p[self.base[i]]
            trans = self._trans[i]
            if x not in trans:
                return p, i
            p = compose(inverse(trans[x]), p)
        return p, len(self.base)

    def _build(self):
        gens = [g for g in self.generators if not is_identity(g)]
        if not gens:
            return
        for g in gens:
            if all(g[b] == b for b in self.base):
                self._append_level(self._new_base_point(g))
        for i in range(len(self.base)):
            self._gens[i] = [g for g in gens if all(g[b] == b for b in self.base[:i])]
        level = len(self.base) - 1
        while level >= 0:
            self._extend_transversal(level)
            jumped = False
            orbit, trans = self._orbits[level], self._trans[level]
            lgens, done = self._gens[level], self._done[level]
            xi = 0
            while xi < len(orbit) and not jumped:
                x = orbit[xi]
                tx = trans[x]
                for si in range(len(lgens)):
                    if (x, si) in done:
                        continue
                    done.add((x, si))
                    s = lgens[si]
                    rep = trans[s[x]]
                    schreier = compose(inverse(rep), compose(s, tx))
                    if is_identity(schreier):
                        continue
                    h, j = self._strip(schreier, level + 1)
                    if is_identity(h):
                        continue
                    if j == len(self.base):
                        self._append_level(self._new_base_point(h))
                    for l in range(level + 1, j + 1):
                        self._gens[l].append(h)
                    level = j
                    jumped = True
                    break
                xi += 1
            if not jumped:
                level -= 1

    # -- queries ---------------------------------------------------------

    def order(self) -> int:
        return prod(len(t) for t in self._trans) if self.base else 1

    def contains(self, p) -> bool:
        p = tuple(p)
        if len(p) != self.degree:
            raise ValueError("degree mismatch")
        h, i = self._strip(p)
        return i == len(self.base) and is_identity(h)

    def basic_orbit_lengths(self):
        return [len(t) for t in self._trans]


def bsgs(generators, degree=None, base_hint=()) -> PermGroup:
    """Build a PermGroup from a generator list."""
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator list")
        degree = len(gens[0])
    return PermGroup(degree, gens, base_hint=base_hint)


def is_subgroup(h: PermGroup, g: PermGroup) -> bool:
    if h.degree != g.degree:
        raise ValueError("degree mismatch")
    return all(g.contains(x) for x in h.generators)


def equal(g: PermGroup, h: PermGroup) -> bool:
    if g.degree != h.degree:
        raise ValueError("degree mismatch")
    if g.order() != h.order():
        return False
    return is_subgroup(g, h) and is_subgroup(h, g)
