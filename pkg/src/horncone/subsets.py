"""Subsets of [n], tuples of subsets, and the exact combinatorics on them.

A ``Subset`` is a set of integers ``{j_1 < ... < j_d}`` inside an ambient
interval ``[1..n]``, identified with the strictly increasing map
``k -> j_k``.  A ``SubsetTuple`` is an s-tuple of subsets of common size
and ambient; these index products of Schubert classes on a Grassmannian
and carry a natural action of the symmetric group on the s positions.

Everything in this module is exact integer / `fractions.Fraction`
arithmetic on immutable values, so all operations are safe to call
concurrently.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb


class InvalidShift(ValueError):
    """Shift too small: the requested gap partition would go negative."""


class CompositionError(ValueError):
    """Subset composition with incompatible size/ambient."""


class Subset:
    """A nonempty subset of [1..ambient], stored strictly increasing.

    The canonical encoding is the bit mask with bit ``j-1`` set iff ``j``
    is in the subset; it round-trips losslessly with the sequence form
    and is the hash/sort key everywhere.
    """

    __slots__ = ("elements", "ambient", "mask")

    def __init__(self, elements, ambient):
        elements = tuple(int(j) for j in elements)
        ambient = int(ambient)
        if not elements:
            raise ValueError("subset must be nonempty")
        if any(b <= a for a, b in zip(elements, elements[1:])):
            raise ValueError(f"elements must be strictly increasing, got {elements}")
        if elements[0] < 1 or elements[-1] > ambient:
            raise ValueError(f"elements {elements} not inside [1..{ambient}]")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "ambient", ambient)
        mask = 0
        for j in elements:
            mask |= 1 << (j - 1)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("Subset is immutable")

    @classmethod
    def from_mask(cls, mask, ambient):
        """Inverse of the bit-mask encoding."""
        elems = [j + 1 for j in range(ambient) if mask >> j & 1]
        return cls(elems, ambient)

    @property
    def size(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, j):
        return 1 <= j <= self.ambient and self.mask >> (j - 1) & 1 == 1

    def __call__(self, k):
        """The k-th element (1-indexed), i.e. the value of the increasing map."""
        return self.elements[k - 1]

    def __eq__(self, other):
        return (
            isinstance(other, Subset)
            and self.mask == other.mask
            and self.ambient == other.ambient
        )

    def __hash__(self):
        return hash((self.mask, self.ambient))

    def __repr__(self):
        return f"Subset({list(self.elements)}, {self.ambient})"

    def dim(self):
        """Dimension of the Schubert variety indexed by this subset:
        sum of ``j_k - k``."""
        return sum(j - k for k, j in enumerate(self.elements, start=1))

    def codim(self):
        """Codimension of the Schubert variety inside Gr(size, ambient)."""
        d = self.size
        return d * (self.ambient - d) - self.dim()

    def gap_partition(self, shift):
        """The weakly decreasing sequence ``(k - j_k + shift)`` over k.

        Records, entry by entry, how far each element is pushed right of
        the initial segment {1..d}, measured from ``shift``.  Requires
        ``shift >= j_d - d`` so all entries are nonnegative.
        """
        parts = tuple(k - j + shift for k, j in enumerate(self.elements, start=1))
        if parts[-1] < 0:
            raise InvalidShift(
                f"shift {shift} < {self.elements[-1] - self.size} leaves negative entries"
            )
        return parts

    def schubert_partition(self):
        """Partition of the Schubert class of this subset in
        Gr(size, ambient); its weight is the codimension."""
        return self.gap_partition(self.ambient - self.size)

    def compose(self, other):
        """Composition of increasing maps: ``(self o other)(k) = self(other(k))``.

        ``other`` must have ambient equal to ``self.size``; the result
        lives in the ambient of ``self``.
        """
        if other.ambient != self.size:
            raise CompositionError(
                f"cannot compose: inner ambient {other.ambient} != outer size {self.size}"
            )
        return Subset((self.elements[j - 1] for j in other.elements), self.ambient)

    def quotient(self, other):
        """The induced position ``((self o other)(k) - other(k) + k)`` of
        ``other`` pushed through ``self`` into ambient ``n - r + d``."""
        if other.ambient != self.size:
            raise CompositionError(
                f"cannot quotient: inner ambient {other.ambient} != outer size {self.size}"
            )
        n, r, d = self.ambient, self.size, other.size
        elems = (
            self.elements[j - 1] - j + k
            for k, j in enumerate(other.elements, start=1)
        )
        return Subset(elems, n - r + d)

    def to_json(self):
        """Serialize as a sorted integer array."""
        return list(self.elements)


class SubsetTuple:
    """An s-tuple of subsets of common size and ambient."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise ValueError("tuple must have at least one component")
        if not all(isinstance(p, Subset) for p in parts):
            raise TypeError("all components must be Subset instances")
        first = parts[0]
        for p in parts[1:]:
            if p.size != first.size or p.ambient != first.ambient:
                raise ValueError("all components must share size and ambient")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("SubsetTuple is immutable")

    @classmethod
    def of(cls, *element_lists, ambient):
        """Convenience constructor from raw element sequences."""
        return cls(Subset(e, ambient) for e in element_lists)

    @property
    def size(self):
        return self.parts[0].size

    @property
    def ambient(self):
        return self.parts[0].ambient

    @property
    def arity(self):
        return len(self.parts)

    @property
    def mask_key(self):
        """Concatenated bit masks; the canonical sort key for tuples."""
        return tuple(p.mask for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, l):
        return self.parts[l]

    def __eq__(self, other):
        return isinstance(other, SubsetTuple) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        inner = ", ".join(str(set(p.elements)) for p in self.parts)
        return f"SubsetTuple[{inner} in [{self.ambient}]]"

    def compose(self, other):
        """Componentwise composition with a tuple of the same arity."""
        if other.arity != self.arity:
            raise CompositionError("arity mismatch in tuple composition")
        return SubsetTuple(p.compose(q) for p, q in zip(self.parts, other.parts))

    def quotient(self, other):
        """Componentwise quotient position."""
        if other.arity != self.arity:
            raise CompositionError("arity mismatch in tuple quotient")
        return SubsetTuple(p.quotient(q) for p, q in zip(self.parts, other.parts))

    def permuted(self, perm):
        """Left action of a permutation on the s positions:
        component l of the result is component perm^{-1}(l)."""
        return SubsetTuple(perm.act(self.parts))

    def is_stable(self, perm):
        """True when the tuple is fixed by the position permutation."""
        return self.permuted(perm) == self

    def to_json(self):
        return [p.to_json() for p in self.parts]


class Permutation:
    """A permutation of [1..s], stored by its image sequence."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of [1..{len(images)}]: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, s):
        return cls(range(1, s + 1))

    @classmethod
    def from_cycles(cls, cycles, s):
        images = list(range(1, s + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def from_cycle_type(cls, lengths):
        """The canonical permutation with the given cycle type: consecutive
        cycles (1..l_1)(l_1+1..l_1+l_2)... in increasing length order."""
        lengths = tuple(sorted(int(x) for x in lengths))
        if any(x < 1 for x in lengths):
            raise ValueError("cycle lengths must be positive")
        s = sum(lengths)
        cycles = []
        start = 1
        for x in lengths:
            cycles.append(tuple(range(start, start + x)))
            start += x
        return cls.from_cycles(cycles, s)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, l):
        return self.images[l - 1]

    def __mul__(self, other):
        """Composition: ``(self * other)(l) = self(other(l))``."""
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self):
        inv = [0] * self.degree
        for l, i in enumerate(self.images, start=1):
            inv[i - 1] = l
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def cycles(self):
        """Disjoint cycles, each starting at its least element, sorted by
        (length, least element)."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        out.sort(key=lambda c: (len(c), c[0]))
        return out

    def cycle_type(self):
        return tuple(sorted(len(c) for c in self.cycles()))

    def act(self, seq):
        """Left action on an s-sequence: position l receives entry
        ``seq[self^{-1}(l)]``."""
        if len(seq) != self.degree:
            raise ValueError("sequence length does not match permutation degree")
        inv = self.inverse()
        return tuple(seq[inv(l) - 1] for l in range(1, self.degree + 1))


def gap_partition(subset, shift):
    """Function form of :meth:`Subset.gap_partition`."""
    return subset.gap_partition(shift)


def schubert_partitions(tup):
    """Componentwise Schubert partitions of a tuple, using the shift
    ``ambient - size`` on every component."""
    return tuple(p.schubert_partition() for p in tup.parts)


def expected_dim(tup):
    """Expected dimension of the intersection of the s Schubert varieties
    indexed by ``tup`` inside Gr(size, ambient): the Grassmannian
    dimension minus the total codimension.  May be negative."""
    d, n = tup.size, tup.ambient
    return d * (n - d) - sum(p.codim() for p in tup.parts)


def entry_sum(tup, spectra):
    """Sum of the spectrum entries selected by the tuple:
    ``sum over l, j in tup[l] of spectra[l][j-1]``."""
    if len(spectra) != tup.arity:
        raise ValueError("spectra arity does not match tuple arity")
    r = tup.ambient
    total = 0
    for part, spec in zip(tup.parts, spectra):
        if len(spec) != r:
            raise ValueError(f"spectrum length {len(spec)} != ambient {r}")
        for j in part.elements:
            total += spec[j - 1]
    return total


def slope(theta, tup):
    """Harder-Narasimhan style slope: the selected entry sum divided by
    the tuple size, as an exact Fraction when the entries are exact."""
    return entry_sum(tup, theta) / Fraction(tup.size)


@lru_cache(maxsize=None)
def all_subsets(size, ambient):
    """All subsets of the given size in [1..ambient], sorted by bit mask.

    The result is cached and shared; callers must not mutate it.
    """
    if not 1 <= size <= ambient:
        raise ValueError(f"need 1 <= size <= ambient, got ({size}, {ambient})")
    subs = [Subset(c, ambient) for c in itertools.combinations(range(1, ambient + 1), size)]
    subs.sort(key=lambda x: x.mask)
    return tuple(subs)


def subset_count(size, ambient):
    return comb(ambient, size)


def all_tuples(size, ambient, arity):
    """Iterate over every arity-tuple of subsets of the given shape, in
    lexicographic order on the concatenated bit masks."""
    subs = all_subsets(size, ambient)
    for combo in itertools.product(subs, repeat=arity):
        yield SubsetTuple(combo)


def stable_tuples(size, ambient, perm):
    """All tuples fixed by ``perm``, enumerated generatively: one free
    subset per cycle of the permutation, propagated along the cycle.
    Returned sorted by mask key."""
    subs = all_subsets(size, ambient)
    cycles = perm.cycles()
    out = []
    for choice in itertools.product(subs, repeat=len(cycles)):
        parts = [None] * perm.degree
        for cyc, sub in zip(cycles, choice):
            for l in cyc:
                parts[l - 1] = sub
        out.append(SubsetTuple(parts))
    out.sort(key=lambda t: t.mask_key)
    return out


def orbit(tup):
    """The set of distinct coordinate permutations of a tuple."""
    return {SubsetTuple(p) for p in itertools.permutations(tup.parts)}


def orbit_representative(tup):
    """Lexicographically least coordinate permutation, comparing the
    element sequences componentwise."""
    best = min(
        itertools.permutations(tup.parts),
        key=lambda parts: tuple(p.elements for p in parts),
    )
    return SubsetTuple(best)


def group_into_orbits(tuples):
    """Partition a collection of tuples into coordinate-permutation
    orbits.  Returns (representative, members) pairs sorted by the
    representative's element sequences."""
    by_rep = {}
    for t in tuples:
        by_rep.setdefault(orbit_representative(t), []).append(t)
    return sorted(
        by_rep.items(), key=lambda kv: tuple(p.elements for p in kv[0].parts)
    )
