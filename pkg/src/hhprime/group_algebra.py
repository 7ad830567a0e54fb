"""F_p group algebra: center, projective-center ideal, and the stable center.

The stable center is the degree-zero part of the corrected Hochschild
cohomology: class sums kappa_i survive exactly when p divides the order of
the centralizer of their representative, and products are computed in the
full center and then truncated to the surviving coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .groups import ConjugacyData, FiniteGroup, conjugacy_classes


class AlgebraElement:
    """Element of F_p[G]; zero coefficients are never stored."""

    __slots__ = ("group", "p", "coeffs")

    def __init__(self, group: FiniteGroup, p: int, coeffs=None):
        self.group = group
        self.p = p
        data = {}
        for g, c in (coeffs or {}).items():
            c = int(c) % p
            if c:
                data[int(g)] = c
        self.coeffs = data

    @classmethod
    def zero(cls, group, p):
        return cls(group, p)

    @classmethod
    def basis(cls, group, p, g):
        return cls(group, p, {g: 1})

    @classmethod
    def one(cls, group, p):
        return cls(group, p, {0: 1})

    def _check(self, other: "AlgebraElement"):
        if self.group is not other.group or self.p != other.p:
            raise ValueError("elements of different group algebras")

    def __add__(self, other):
        self._check(other)
        data = dict(self.coeffs)
        for g, c in other.coeffs.items():
            data[g] = data.get(g, 0) + c
        return AlgebraElement(self.group, self.p, data)

    def __sub__(self, other):
        self._check(other)
        data = dict(self.coeffs)
        for g, c in other.coeffs.items():
            data[g] = data.get(g, 0) - c
        return AlgebraElement(self.group, self.p, data)

    def scale(self, k: int):
        return AlgebraElement(self.group, self.p, {g: c * k for g, c in self.coeffs.items()})

    def __mul__(self, other):
        self._check(other)
        mul = self.group.mul
        data: dict[int, int] = {}
        for g, c in self.coeffs.items():
            row = mul[g]
            for h, d in other.coeffs.items():
                k = row[h]
                data[k] = data.get(k, 0) + c * d
        return AlgebraElement(self.group, self.p, data)

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement) and self.group is other.group
                and self.p == other.p and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.group), self.p, tuple(sorted(self.coeffs.items()))))

    def is_zero(self) -> bool:
        return not self.coeffs

    def vector(self) -> np.ndarray:
        v = np.zeros(self.group.order, dtype=np.int64)
        for g, c in self.coeffs.items():
            v[g] = c
        return v

    def is_central(self) -> bool:
        G = self.group
        return all((AlgebraElement.basis(G, self.p, g) * self ==
                    self * AlgebraElement.basis(G, self.p, g)) for g in range(G.order))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for g in sorted(self.coeffs):
            c = self.coeffs[g]
            lbl = self.group.labels[g]
            terms.append(lbl if c == 1 else f"{c}*{lbl}")
        return " + ".join(terms)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


@dataclass(frozen=True)
class CenterBasis:
    group: FiniteGroup
    p: int
    conjugacy: ConjugacyData
    class_sums: tuple[AlgebraElement, ...]


def class_sums(G: FiniteGroup, p: int, cd: ConjugacyData | None = None) -> CenterBasis:
    cd = cd or conjugacy_classes(G)
    sums = tuple(AlgebraElement(G, p, {g: 1 for g in cls}) for cls in cd.classes)
    return CenterBasis(G, p, cd, sums)


def trace_from_identity(a: AlgebraElement) -> AlgebraElement:
    """Tr_1^G(a) = sum over g of g a g^-1; always central."""
    G = a.group
    data: dict[int, int] = {}
    for g in range(G.order):
        for h, c in a.coeffs.items():
            k = G.conjugate(g, h)
            data[k] = data.get(k, 0) + c
    return AlgebraElement(G, a.p, data)


def surviving_classes(G: FiniteGroup, p: int, cd: ConjugacyData | None = None) -> tuple[int, ...]:
    cd = cd or conjugacy_classes(G)
    return tuple(i for i, h in enumerate(cd.centralizers) if h.order % p == 0)


def projective_center_basis(G: FiniteGroup, p: int) -> list[AlgebraElement]:
    """Class sums whose centralizer order is prime to p."""
    cb = class_sums(G, p)
    return [cb.class_sums[i] for i, h in enumerate(cb.conjugacy.centralizers)
            if h.order % p != 0]


@dataclass(frozen=True)
class StableCenter:
    group: FiniteGroup
    p: int
    conjugacy: ConjugacyData
    surviving: tuple[int, ...]
    table: np.ndarray  # shape (r, r, r): table[i, j] = product coefficients

    @property
    def dim(self) -> int:
        return len(self.surviving)

    def basis_labels(self) -> tuple[str, ...]:
        return tuple(f"C{k + 1}" for k in range(self.dim))

    def unit_index(self) -> int:
        if 0 not in self.surviving:
            raise ValueError("stable center is zero; no unit")
        return self.surviving.index(0)

    def product(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        for i, ci in enumerate(u):
            if ci % self.p == 0:
                continue
            for j, cj in enumerate(v):
                if cj % self.p == 0:
                    continue
                out = (out + ci * cj * self.table[i, j]) % self.p
        return out


def stable_center(G: FiniteGroup, p: int) -> StableCenter:
    cd = conjugacy_classes(G)
    cb = class_sums(G, p, cd)
    surv = surviving_classes(G, p, cd)
    r = len(surv)
    table = np.zeros((r, r, r), dtype=np.int64)
    for a, i in enumerate(surv):
        for b, j in enumerate(surv):
            prod = cb.class_sums[i] * cb.class_sums[j]
            # central products are constant on classes; read off at representatives
            for c, k in enumerate(surv):
                table[a, b, c] = prod.coeffs.get(cd.reps[k], 0)
            # sanity: coefficients constant on each class
            for cls in cd.classes:
                vals = {prod.coeffs.get(g, 0) for g in cls}
                if len(vals) != 1:
                    raise AssertionError("class-sum product is not central")
    return StableCenter(G, p, cd, surv, table)


def verify_projective_cover_system(G: FiniteGroup, p: int, z: AlgebraElement) -> bool:
    """Decide z in Z^pr(kG) by solving for a factorization through the projective cover.

    The endomorphism x -> xz factors through the cover exactly when the linear
    system z_i = |C_G(g_i)| * sum of sigma_g over the class of g_i has a
    solution in the sigma_g; this solves it outright rather than using the
    closed-form basis.
    """
    if z.group is not G or z.p != p:
        raise ValueError("element does not belong to F_p[G]")
    if not z.is_central():
        raise ValueError("projective-cover membership is only defined for central elements")
    cd = conjugacy_classes(G)
    rows = np.zeros((cd.num_classes, G.order), dtype=np.int64)
    rhs = np.zeros(cd.num_classes, dtype=np.int64)
    for i, cls in enumerate(cd.classes):
        for g in cls:
            rows[i, g] = cd.centralizers[i].order % p
        rhs[i] = z.coeffs.get(cd.reps[i], 0)
    return linalg.solve(rows, rhs, p) is not None


def trace_span_matches_projective_basis(G: FiniteGroup, p: int) -> bool:
    """Span of Tr_1^G over group elements equals the span of the closed-form basis."""
    traces = [trace_from_identity(AlgebraElement.basis(G, p, g)).vector()
              for g in range(G.order)]
    basis = [b.vector() for b in projective_center_basis(G, p)]
    tr = np.array(traces, dtype=np.int64) if traces else np.zeros((0, G.order), dtype=np.int64)
    bs = np.array(basis, dtype=np.int64) if basis else np.zeros((0, G.order), dtype=np.int64)
    rt = linalg.rank(tr, p)
    rb = linalg.rank(bs, p)
    if rt != rb:
        return False
    if rb == 0:
        return True
    return linalg.rank(np.vstack([tr, bs]), p) == rb
