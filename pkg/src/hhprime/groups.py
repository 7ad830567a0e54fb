"""Cayley-table finite groups and the combinatorics the product formula needs.

Groups live entirely in a full multiplication table over element indices
0..order-1 with 0 the identity; presets carry standard presentations with
readable labels, and the conjugacy-class ordering of a preset follows its
bundled representative list so that downstream tables are index-stable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

import numpy as np

DEFAULT_ELEMENT_CAP = 10000


class GroupSizeError(ValueError):
    """Raised when a closure exceeds the configured element cap."""


class GroupSpecError(ValueError):
    """Raised for malformed or unknown group spec strings."""


class FiniteGroup:
    """Finite group as a full multiplication table; element 0 is the identity."""

    def __init__(self, mul, labels=None, tag=None, meta=None):
        table = tuple(tuple(int(x) for x in row) for row in mul)
        n = len(table)
        if any(len(row) != n for row in table):
            raise ValueError("multiplication table must be square")
        self.order = n
        self.mul = table
        self.tag = tag
        self.meta = dict(meta or {})
        if labels is None:
            labels = tuple(f"g{i}" for i in range(n))
        self.labels = tuple(str(s) for s in labels)
        if len(self.labels) != n:
            raise ValueError("label count does not match order")
        if len(set(self.labels)) != n:
            raise ValueError("labels must be unique")
        self._validate()
        inv = [-1] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == 0:
                    if table[b][a] != 0:
                        raise ValueError(f"one-sided inverse at element {a}")
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise ValueError(f"element {a} has no inverse")
        self.inv = tuple(inv)
        self._mul_array = None
        self._caches: dict = {}

    def _validate(self):
        m = np.asarray(self.mul, dtype=np.int64)
        n = self.order
        if np.any(m < 0) or np.any(m >= n):
            raise ValueError("table entries out of range")
        ar = np.arange(n)
        if not np.array_equal(m[0], ar) or not np.array_equal(m[:, 0], ar):
            raise ValueError("element 0 is not a two-sided identity")
        if n <= 64:
            # m[m][a,b,c] = (ab)c and m[:, m][a,b,c] = a(bc)
            if not np.array_equal(m[m], m[:, m]):
                raise ValueError("multiplication table is not associative")

    def multiply(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conjugate(self, g: int, h: int) -> int:
        """g h g^-1."""
        return self.mul[self.mul[g][h]][self.inv[g]]

    def commutes(self, a: int, b: int) -> bool:
        return self.mul[a][b] == self.mul[b][a]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul[x][g]
            k += 1
        return k

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        x = 0
        for _ in range(k):
            x = self.mul[x][g]
        return x

    def mul_array(self) -> np.ndarray:
        if self._mul_array is None:
            arr = np.asarray(self.mul, dtype=np.int32)
            arr.flags.writeable = False
            self._mul_array = arr
        return self._mul_array

    def index_of_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r} in {self!r}") from None

    def __repr__(self):
        name = self.tag or "group"
        return f"FiniteGroup({name}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """Sorted element-index list, closed under product and inverse."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(int(x) for x in self.elements))))
        G = self.parent
        elems = set(self.elements)
        if 0 not in elems:
            raise ValueError("subgroup must contain the identity")
        for a in self.elements:
            if G.inv[a] not in elems:
                raise ValueError("subgroup not closed under inverse")
            for b in self.elements:
                if G.mul[a][b] not in elems:
                    raise ValueError("subgroup not closed under multiplication")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def label(self) -> str:
        G = self.parent
        return "{" + ",".join(G.labels[g] for g in self.elements) + "}"

    def __repr__(self):
        return f"Subgroup(order={self.order}, elements={self.elements})"


@dataclass(frozen=True)
class ConjugacyData:
    group: FiniteGroup
    reps: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    centralizers: tuple[Subgroup, ...]

    @property
    def num_classes(self) -> int:
        return len(self.reps)

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def centralizer_orders(self) -> tuple[int, ...]:
        return tuple(h.order for h in self.centralizers)


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    left: Subgroup
    right: Subgroup
    reps: tuple[int, ...]
    cosets: tuple[frozenset, ...]
    coset_sizes: tuple[int, ...]


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def generated_subgroup(G: FiniteGroup, gens) -> Subgroup:
    elems = {0}
    frontier = [0]
    gens = [int(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul[x][g]
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(elems))


def centralizer(G: FiniteGroup, g: int) -> Subgroup:
    return Subgroup(G, tuple(h for h in range(G.order) if G.commutes(h, g)))


def subgroup_centralizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    return Subgroup(G, tuple(h for h in range(G.order)
                             if all(G.commutes(h, x) for x in H.elements)))


def normalizer(G: FiniteGroup, H: Subgroup, within: Subgroup | None = None) -> Subgroup:
    universe = within.elements if within is not None else range(G.order)
    hset = set(H.elements)
    elems = [g for g in universe if {G.conjugate(g, h) for h in H.elements} == hset]
    return Subgroup(G, tuple(elems))


def intersect(H: Subgroup, K: Subgroup) -> Subgroup:
    if H.parent is not K.parent:
        raise ValueError("subgroups of different groups")
    return Subgroup(H.parent, tuple(set(H.elements) & set(K.elements)))


def conjugate_subgroup(g: int, H: Subgroup) -> Subgroup:
    G = H.parent
    return Subgroup(G, tuple(G.conjugate(g, h) for h in H.elements))


def conjugacy_classes(G: FiniteGroup) -> ConjugacyData:
    cached = G._caches.get("conjugacy")
    if cached is not None:
        return cached
    n = G.order
    class_of = [-1] * n
    classes: list[tuple[int, ...]] = []
    reps: list[int] = []
    for g in range(n):
        if class_of[g] >= 0:
            continue
        orbit = sorted({G.conjugate(x, g) for x in range(n)})
        idx = len(classes)
        for h in orbit:
            class_of[h] = idx
        classes.append(tuple(orbit))
        reps.append(g)
    rep_labels = G.meta.get("class_reps")
    if rep_labels is not None:
        chosen = [G.index_of_label(lbl) for lbl in rep_labels]
        seen_classes = [class_of[g] for g in chosen]
        if sorted(seen_classes) != list(range(len(classes))):
            raise ValueError(f"class representative list for {G.tag} is not a transversal")
        order = seen_classes
        perm = [0] * len(classes)
        for new_idx, old_idx in enumerate(order):
            perm[old_idx] = new_idx
        classes = [classes[order[i]] for i in range(len(classes))]
        reps = list(chosen)
        class_of = [perm[c] for c in class_of]
    if reps[0] != 0:
        raise ValueError("identity class must come first")
    cents = tuple(centralizer(G, g) for g in reps)
    data = ConjugacyData(G, tuple(reps), tuple(classes), tuple(class_of), cents)
    G._caches["conjugacy"] = data
    return data


def find_class_and_conjugator(cd: ConjugacyData, h: int, pick=None) -> tuple[int, int]:
    """Class index k of h, and a y with y h y^-1 = reps[k] (minimal index by default)."""
    G = cd.group
    k = cd.class_of[h]
    target = cd.reps[k]
    candidates = [y for y in range(G.order) if G.conjugate(y, h) == target]
    if pick is None:
        return k, candidates[0]
    return k, pick(candidates)


def double_cosets(G: FiniteGroup, H: Subgroup, K: Subgroup,
                  within: Subgroup | None = None) -> DoubleCosetDecomposition:
    universe = within.elements if within is not None else tuple(range(G.order))
    total = len(universe)
    covered: set[int] = set()
    reps: list[int] = []
    cosets: list[frozenset] = []
    for x in universe:
        if x in covered:
            continue
        coset = frozenset(G.mul[G.mul[h][x]][k] for h in H.elements for k in K.elements)
        if not coset <= set(universe):
            raise ValueError("subgroups do not lie in the given universe")
        covered |= coset
        reps.append(x)
        cosets.append(coset)
    if sum(len(c) for c in cosets) != total:
        raise AssertionError("double cosets do not partition the group")
    return DoubleCosetDecomposition(H, K, tuple(reps), tuple(cosets),
                                    tuple(len(c) for c in cosets))


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_subgroup(G: FiniteGroup, H: Subgroup, p: int) -> Subgroup:
    """Designated Sylow p-subgroup of H: lexicographically least among all of them."""
    key = ("sylow", H.elements, p)
    cached = G._caches.get(key)
    if cached is not None:
        return cached
    q = p_part(H.order, p)
    if q == 1:
        result = trivial_subgroup(G)
        G._caches[key] = result
        return result
    S = {0}
    while len(S) < q:
        Ssub = Subgroup(G, tuple(S))
        N = normalizer(G, Ssub, within=H)
        for h in N.elements:
            if h in S:
                continue
            if not is_p_power(G.element_order(h), p):
                continue
            T = generated_subgroup(G, list(S) + [h])
            if is_p_power(T.order, p) and T.order <= q:
                S = set(T.elements)
                break
        else:
            raise AssertionError("Sylow subgroup construction stalled")
    sylows = {tuple(sorted(G.conjugate(h, s) for s in S)) for h in H.elements}
    result = Subgroup(G, min(sylows))
    G._caches[key] = result
    return result


def has_normal_p_complement(G: FiniteGroup, H: Subgroup, p: int) -> bool:
    """True iff the p'-elements of H form a subgroup (then it is the complement)."""
    comp = [h for h in H.elements if gcd(G.element_order(h), p) == 1]
    target = H.order // p_part(H.order, p)
    if len(comp) != target:
        return False
    cset = set(comp)
    return all(G.mul[a][b] in cset for a in comp for b in comp)


def is_normal(G: FiniteGroup, H: Subgroup, within: Subgroup | None = None) -> bool:
    universe = within.elements if within is not None else range(G.order)
    hset = set(H.elements)
    return all({G.conjugate(g, h) for h in H.elements} == hset for g in universe)


# ---------------------------------------------------------------------------
# permutation utilities


def compose_perms(a: tuple, b: tuple) -> tuple:
    """(a*b)[i] = a[b[i]]: apply b first."""
    return tuple(a[x] for x in b)


def parse_cycles(text: str, n: int) -> tuple[int, ...]:
    """Parse 1-based cycle notation like (12)(34) or (1,12)(2,5) into a permutation."""
    text = text.strip()
    perm = list(range(n))
    if text in ("", "()", "e"):
        return tuple(perm)
    if not re.fullmatch(r"(\([^()]*\))+", text):
        raise GroupSpecError(f"bad cycle notation: {text!r}")
    for cyc in re.findall(r"\(([^()]*)\)", text):
        cyc = cyc.strip()
        if not cyc:
            continue
        if "," in cyc or " " in cyc:
            pts = [int(t) for t in re.split(r"[,\s]+", cyc) if t]
        else:
            pts = [int(ch) for ch in cyc]
        pts0 = [x - 1 for x in pts]
        if any(x < 0 or x >= n for x in pts0):
            raise GroupSpecError(f"cycle point out of range in {text!r} (n={n})")
        if len(set(pts0)) != len(pts0):
            raise GroupSpecError(f"repeated point in cycle {cyc!r}")
        for i, x in enumerate(pts0):
            perm[x] = pts0[(i + 1) % len(pts0)]
    return tuple(perm)


def cycle_label(perm: tuple) -> str:
    n = len(perm)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        pts = [str(i + 1) for i in cyc]
        if n > 9:
            parts.append("(" + ",".join(pts) + ")")
        else:
            parts.append("(" + "".join(pts) + ")")
    return "".join(parts) if parts else "e"


def build_from_generators(n_points: int, generators, cap: int = DEFAULT_ELEMENT_CAP,
                          tag=None) -> FiniteGroup:
    """Close permutation generators breadth-first from the identity."""
    gens = []
    for g in generators:
        perm = tuple(int(x) for x in g)
        if sorted(perm) != list(range(n_points)):
            raise ValueError(f"not a permutation of {n_points} points: {g}")
        gens.append(perm)
    identity = tuple(range(n_points))
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose_perms(x, g)
                if y not in index:
                    if len(elements) >= cap:
                        raise GroupSizeError(f"group closure exceeds cap of {cap} elements")
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    n = len(elements)
    mul = [[index[compose_perms(a, b)] for b in elements] for a in elements]
    labels = [cycle_label(e) for e in elements]
    return FiniteGroup(mul, labels=labels, tag=tag)


# ---------------------------------------------------------------------------
# presets


def _word_label(parts: list[tuple[str, int]]) -> str:
    chunks = []
    for sym, e in parts:
        if e == 0:
            continue
        chunks.append(sym if e == 1 else f"{sym}^{e}")
    return " ".join(chunks) if chunks else "1"


def _cyclic(n: int) -> FiniteGroup:
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = [_word_label([("a", i)]) for i in range(n)]
    return FiniteGroup(mul, labels=labels, tag=f"C{n}")


def _dihedral(order: int) -> FiniteGroup:
    if order % 2 or order < 2:
        raise GroupSpecError(f"dihedral order must be even and >= 2, got {order}")
    n = order // 2
    # index: a^i -> i, a^i b -> n + i
    def idx(i, j):
        return i % n + (n if j else 0)

    mul = [[0] * order for _ in range(order)]
    for i1 in range(n):
        for j1 in range(2):
            for i2 in range(n):
                for j2 in range(2):
                    # (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + (-1)^j1 i2) b^(j1+j2)
                    i = (i1 + (i2 if j1 == 0 else -i2)) % n
                    mul[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2)
    labels = [_word_label([("a", i)]) for i in range(n)] + \
             [_word_label([("a", i), ("b", 1)]) for i in range(n)]
    if n % 2:
        rep_labels = ["1"] + [labels[i] for i in range(1, n // 2 + 1)] + ["b"]
    else:
        rep_labels = ["1", labels[n // 2]] + [labels[i] for i in range(1, n // 2)] + \
                     ["b", _word_label([("a", 1), ("b", 1)])]
    meta = {"class_reps": rep_labels, "gens": {"a": 1, "b": n}}
    return FiniteGroup(mul, labels=labels, tag=f"D{order}", meta=meta)


def _t_group() -> FiniteGroup:
    # <a, b | a^4 = b^3 = 1, a b a^-1 = b^-1>, index of a^i b^j is 3i + j
    def idx(i, j):
        return 3 * (i % 4) + (j % 3)

    mul = [[0] * 12 for _ in range(12)]
    for i1 in range(4):
        for j1 in range(3):
            for i2 in range(4):
                for j2 in range(3):
                    # b^j a^i = a^i b^(j * (-1)^i)
                    j_moved = j1 if i2 % 2 == 0 else -j1
                    mul[idx(i1, j1)][idx(i2, j2)] = idx(i1 + i2, j_moved + j2)
    labels = [_word_label([("a", i), ("b", j)]) for i in range(4) for j in range(3)]
    meta = {
        "class_reps": ["1", "a^2", "b", "a^2 b", "a", "a^3 b"],
        "gens": {"a": idx(1, 0), "b": idx(0, 1)},
    }
    return FiniteGroup(mul, labels=labels, tag="T", meta=meta)


def _a4() -> FiniteGroup:
    a = parse_cycles("(12)(34)", 4)
    b = parse_cycles("(13)(24)", 4)
    c = parse_cycles("(123)", 4)
    G = build_from_generators(4, [a, b, c], tag="A4")
    G.meta["class_reps"] = ["e", "(123)", "(132)", "(12)(34)"]
    G.meta["gens"] = {"a": G.labels.index("(12)(34)"), "b": G.labels.index("(13)(24)"),
                      "c": G.labels.index("(123)")}
    return G


def _sl2_3() -> FiniteGroup:
    mats = []
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a * d - b * c) % 3 == 1:
                        mats.append((a, b, c, d))
    identity = (1, 0, 0, 1)
    mats.remove(identity)
    mats = [identity] + sorted(mats)
    index = {m: i for i, m in enumerate(mats)}

    def mmul(x, y):
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return ((a1 * a2 + b1 * c2) % 3, (a1 * b2 + b1 * d2) % 3,
                (c1 * a2 + d1 * c2) % 3, (c1 * b2 + d1 * d2) % 3)

    mul = [[index[mmul(x, y)] for y in mats] for x in mats]

    def lbl(m):
        return f"[{m[0]} {m[1]}; {m[2]} {m[3]}]"

    labels = [lbl(m) for m in mats]
    reps = [(1, 0, 0, 1), (2, 0, 0, 2), (0, 1, 2, 2), (2, 2, 1, 0),
            (0, 1, 2, 1), (1, 2, 1, 0), (0, 1, 2, 0)]
    meta = {"class_reps": [lbl(m) for m in reps]}
    return FiniteGroup(mul, labels=labels, tag="SL2_3", meta=meta)


def _q8() -> FiniteGroup:
    # elements: 1, -1, i, -i, j, -j, k, -k  (axis 0..3 = 1,i,j,k; sign bit)
    def enc(axis, sign):
        return 2 * axis + sign

    table = {}
    axes = {1: "i", 2: "j", 3: "k"}
    prod = {(1, 2): (3, 0), (2, 3): (1, 0), (3, 1): (2, 0),
            (2, 1): (3, 1), (3, 2): (1, 1), (1, 3): (2, 1)}
    mul = [[0] * 8 for _ in range(8)]
    for a1 in range(4):
        for s1 in range(2):
            for a2 in range(4):
                for s2 in range(2):
                    if a1 == 0:
                        axis, s = a2, 0
                    elif a2 == 0:
                        axis, s = a1, 0
                    elif a1 == a2:
                        axis, s = 0, 1
                    else:
                        axis, s = prod[(a1, a2)]
                    mul[enc(a1, s1)][enc(a2, s2)] = enc(axis, (s1 + s2 + s) % 2)
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    meta = {"class_reps": ["1", "-1", "i", "j", "k"]}
    return FiniteGroup(mul, labels=labels, tag="Q8", meta=meta)


def abelian_group_from_spec(spec: str) -> FiniteGroup:
    """Direct products of cyclic groups: C6, V4, C2xC2xC3, ..."""
    s = spec.strip().replace("X", "x")
    if s.upper() == "V4":
        s = "C2xC2"
    factors = []
    for part in s.split("x"):
        m = re.fullmatch(r"[Cc](\d+)", part.strip())
        if not m:
            raise GroupSpecError(f"bad abelian group spec {spec!r}")
        factors.append(int(m.group(1)))
    if not factors or any(f < 1 for f in factors):
        raise GroupSpecError(f"bad abelian group spec {spec!r}")
    n = 1
    for f in factors:
        n *= f

    def decode(x):
        out = []
        for f in reversed(factors):
            x, r = divmod(x, f)
            out.append(r)
        return tuple(reversed(out))

    def encode(t):
        x = 0
        for f, v in zip(factors, t):
            x = x * f + (v % f)
        return x

    mul = [[encode(tuple(a + b for a, b in zip(decode(x), decode(y))))
            for y in range(n)] for x in range(n)]
    labels = ["(" + ",".join(str(v) for v in decode(x)) + ")" for x in range(n)]
    G = FiniteGroup(mul, labels=labels, tag=s, meta={"cyclic_factors": tuple(factors)})
    return G


def semidirect_product(e_order: int, P: FiniteGroup, aut, tag=None) -> FiniteGroup:
    """C_m acting on abelian P via the automorphism `aut` (a permutation of P)."""
    aut = tuple(int(x) for x in aut)
    np_ = P.order
    if sorted(aut) != list(range(np_)):
        raise GroupSpecError("automorphism must be a permutation of the normal part")
    for x in range(np_):
        for y in range(np_):
            if aut[P.mul[x][y]] != P.mul[aut[x]][aut[y]]:
                raise GroupSpecError("permutation is not an automorphism")
    powers = [tuple(range(np_))]
    for _ in range(e_order):
        powers.append(tuple(aut[x] for x in powers[-1]))
    if powers[e_order] != powers[0]:
        raise GroupSpecError(f"automorphism order does not divide {e_order}")
    powers = powers[:e_order]

    def idx(p_idx, e_idx):
        return (e_idx % e_order) * np_ + p_idx

    order = e_order * np_
    mul = [[0] * order for _ in range(order)]
    for e1 in range(e_order):
        for p1 in range(np_):
            for e2 in range(e_order):
                for p2 in range(np_):
                    # (p1 e1)(p2 e2) = p1 * (e1 p2 e1^-1) * e1 e2
                    p = P.mul[p1][powers[e1][p2]]
                    mul[idx(p1, e1)][idx(p2, e2)] = idx(p, e1 + e2)
    labels = []
    for e in range(e_order):
        for x in range(np_):
            pl = P.labels[x]
            el = _word_label([("t", e)])
            if e == 0:
                labels.append(pl if x else "1")
            elif x == 0:
                labels.append(el)
            else:
                labels.append(f"{pl} {el}")
    meta = {
        "normal_part": tuple(range(np_)),
        "complement": tuple(idx(0, e) for e in range(e_order)),
        "normal_factors": P.meta.get("cyclic_factors"),
    }
    return FiniteGroup(mul, labels=labels, tag=tag or f"C{e_order}:{P.tag}", meta=meta)


def preset(name: str, *params) -> FiniteGroup:
    """Bundled groups: C n, D order, A4, T, SL2_3, Q8, semidirect E P aut."""
    name = name.strip()
    if name == "C":
        (n,) = params
        if n < 1:
            raise GroupSpecError("cyclic order must be >= 1")
        return _cyclic(int(n))
    if name == "D":
        (order,) = params
        return _dihedral(int(order))
    if name == "A4":
        return _a4()
    if name == "T":
        return _t_group()
    if name in ("SL2_3", "SL2(3)"):
        return _sl2_3()
    if name == "Q8":
        return _q8()
    if name == "semidirect":
        e_spec, p_spec, aut = params
        m = re.fullmatch(r"[Cc](\d+)", str(e_spec).strip())
        if not m:
            raise GroupSpecError(f"semidirect complement must be cyclic, got {e_spec!r}")
        P = abelian_group_from_spec(str(p_spec))
        return semidirect_product(int(m.group(1)), P, aut,
                                  tag=f"{e_spec}:{p_spec}")
    raise GroupSpecError(f"unknown preset {name!r}")


def parse_group_spec(text: str) -> FiniteGroup:
    """Parse CLI group specs: preset:D12, preset:semidirect:C3:V4:0,2,3,1, perm:4:(12)(34);(123)."""
    text = text.strip()
    parts = text.split(":")
    if not parts or parts[0] not in ("preset", "perm"):
        raise GroupSpecError(f"group spec must start with 'preset:' or 'perm:', got {text!r}")
    if parts[0] == "perm":
        if len(parts) != 3:
            raise GroupSpecError(f"perm spec needs 'perm:<n>:<cycles;...>', got {text!r}")
        try:
            n = int(parts[1])
        except ValueError:
            raise GroupSpecError(f"bad point count in {text!r}") from None
        gens = [parse_cycles(tok, n) for tok in parts[2].split(";") if tok.strip()]
        import os
        cap = int(os.environ.get("HHPRIME_ELEMENT_CAP", DEFAULT_ELEMENT_CAP))
        return build_from_generators(n, gens, cap=cap, tag=f"perm:{n}")
    body = parts[1:]
    if not body:
        raise GroupSpecError(f"empty preset in {text!r}")
    head = body[0]
    if head == "semidirect":
        if len(body) != 4:
            raise GroupSpecError(
                f"semidirect spec needs 'preset:semidirect:<E>:<P>:<perm>', got {text!r}")
        try:
            aut = [int(t) for t in body[3].split(",")]
        except ValueError:
            raise GroupSpecError(f"bad automorphism list in {text!r}") from None
        return preset("semidirect", body[1], body[2], aut)
    if len(body) != 1:
        raise GroupSpecError(f"unexpected preset arguments in {text!r}")
    if head in ("A4", "T", "Q8", "SL2_3", "SL2(3)"):
        return preset(head)
    m = re.fullmatch(r"([CD])(\d+)", head)
    if m:
        return preset(m.group(1), int(m.group(2)))
    raise GroupSpecError(f"unknown preset {head!r}")
