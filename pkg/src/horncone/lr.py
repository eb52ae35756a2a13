"""Littlewood-Richardson rule and Schubert-class products on a Grassmannian.

Schubert classes of Gr(r, n) are indexed by partitions inside the
r x (n-r) box; products expand through integer Littlewood-Richardson
coefficients, computed here by direct enumeration of skew tableaux with
lattice-word pruning.  Coefficients are plain Python ints, so they never
overflow.

The main entry point is :func:`classify`, which decides whether the
product of the Schubert classes of a subset tuple is zero, nonzero, a
multiple of the point class, or the point class itself.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Optional

from .subsets import expected_dim


def normalize_partition(parts):
    """Trim trailing zeros and validate weak decrease."""
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not weakly decreasing: {parts}")
    k = len(parts)
    while k and parts[k - 1] == 0:
        k -= 1
    return parts[:k]


def fits_box(parts, rows, cols):
    parts = normalize_partition(parts)
    return len(parts) <= rows and (not parts or parts[0] <= cols)


def contains(outer, inner):
    """Containment of Young diagrams."""
    outer, inner = normalize_partition(outer), normalize_partition(inner)
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def lr_coefficient(lam, mu, nu):
    """The Littlewood-Richardson coefficient c(lam, mu; nu): the number
    of semistandard skew tableaux of shape nu/lam and content mu whose
    reverse reading word is a lattice word.  Zero when the shapes are
    incompatible."""
    lam, mu, nu = normalize_partition(lam), normalize_partition(mu), normalize_partition(nu)
    if not contains(nu, lam):
        return 0
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if not mu:
        return 1
    return _count_skew_lattice_fillings(nu, lam, mu)


def _count_skew_lattice_fillings(nu, lam, mu):
    """Count the fillings by backtracking over cells in reverse reading
    order (rows top to bottom, right to left), pruning on row/column
    conditions, content and the lattice prefix condition."""
    lam_pad = lam + (0,) * (len(nu) - len(lam))
    cells = []
    for i, (lo, hi) in enumerate(zip(lam_pad, nu)):
        for j in range(hi - 1, lo - 1, -1):
            cells.append((i, j))
    nvals = len(mu)
    counts = [0] * nvals
    grid = [[0] * hi for hi in nu]
    total = 0

    def fill(pos):
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, j = cells[pos]
        right = grid[i][j + 1] if j + 1 < nu[i] else nvals
        above = grid[i - 1][j] if i > 0 and j >= lam_pad[i - 1] else 0
        for v in range(above + 1, right + 1):
            if counts[v - 1] >= mu[v - 1]:
                continue
            if v > 1 and counts[v - 2] <= counts[v - 1]:
                continue
            grid[i][j] = v
            counts[v - 1] += 1
            fill(pos + 1)
            counts[v - 1] -= 1
        grid[i][j] = 0

    fill(0)
    return total


def _iter_partitions_over(lam, extra, rows, cols):
    """Yield partitions nu in the rows x cols box with nu containing lam
    and |nu| = |lam| + extra."""
    lam_pad = list(lam) + [0] * (rows - len(lam))

    def rec(i, prev, remaining, acc):
        if i == rows:
            if remaining == 0:
                yield tuple(acc)
            return
        lo = lam_pad[i]
        hi = min(prev, cols)
        # parts below row i can absorb at most (rows - i - 1) * cols cells
        for v in range(hi, lo - 1, -1):
            used = v - lo
            if used > remaining:
                continue
            rest = remaining - used
            if rest > (rows - i - 1) * cols:
                continue
            acc.append(v)
            yield from rec(i + 1, v, rest, acc)
            acc.pop()

    yield from rec(0, cols, extra, [])


@lru_cache(maxsize=None)
def schur_product_in_box(lam, mu, rows, cols):
    """Expansion of the product of two Schur/Schubert classes inside the
    rows x cols box, as a tuple of (partition, coefficient) pairs.
    Partitions outside the box are discarded; this is the multiplication
    of the cohomology ring of Gr(rows, rows + cols)."""
    lam, mu = normalize_partition(lam), normalize_partition(mu)
    if not fits_box(lam, rows, cols) or not fits_box(mu, rows, cols):
        return ()
    out = []
    for nu in _iter_partitions_over(lam, sum(mu), rows, cols):
        c = lr_coefficient(lam, mu, normalize_partition(nu))
        if c:
            out.append((normalize_partition(nu), c))
    return tuple(out)


def schubert_product(partitions, grassmannian):
    """Product of Schubert classes in H*(Gr(r, n)), as a dict mapping box
    partitions to positive integer coefficients.  Empty dict means the
    product is zero.  The fold truncates to the box after every step."""
    r, n = grassmannian
    rows, cols = r, n - r
    vec = {(): 1}
    for lam in partitions:
        lam = normalize_partition(lam)
        if not fits_box(lam, rows, cols):
            return {}
        new = {}
        for key, coeff in vec.items():
            for nu, c in schur_product_in_box(key, lam, rows, cols):
                new[nu] = new.get(nu, 0) + coeff * c
        vec = new
        if not vec:
            return {}
    return vec


def subset_to_schubert_partition(subset, n=None):
    """Partition of the Schubert class of a subset of [1..n]; the weight
    of the result is the codimension of the class in Gr(size, n)."""
    if n is not None and n != subset.ambient:
        raise ValueError(f"subset lives in [1..{subset.ambient}], not [1..{n}]")
    return subset.schubert_partition()


KIND_ZERO = "zero"
KIND_POSITIVE = "positive"
KIND_POINT_MULTIPLE = "point_multiple"
KIND_POINT = "point"


class IntersectionClass(NamedTuple):
    """Classification of a Schubert product.

    kind:
      * ``zero`` -- the product vanishes (the tuple is not intersecting);
      * ``positive`` -- nonzero, but not concentrated on the point class;
      * ``point_multiple`` -- c times the point class with c >= 2;
      * ``point`` -- exactly the point class (coefficient one).

    ``point_coefficient`` is the coefficient of the point class when the
    expected dimension is zero, and None otherwise.
    """

    kind: str
    point_coefficient: Optional[int]

    @property
    def is_intersecting(self):
        return self.kind != KIND_ZERO

    @property
    def is_zero_dim(self):
        """Nonzero product of total codimension equal to dim Gr: a
        multiple of the point class (the coefficient may be one)."""
        return self.kind in (KIND_POINT_MULTIPLE, KIND_POINT)

    @property
    def is_point(self):
        return self.kind == KIND_POINT


def classify(tup):
    """Classify the product of the Schubert classes of a subset tuple in
    the cohomology of Gr(size, ambient)."""
    r, n = tup.size, tup.ambient
    edim = expected_dim(tup)
    vec = schubert_product([p.schubert_partition() for p in tup.parts], (r, n))
    if edim != 0:
        kind = KIND_ZERO if not vec else KIND_POSITIVE
        return IntersectionClass(kind, None)
    box_full = normalize_partition((n - r,) * r)
    coeff = vec.get(box_full, 0)
    if coeff == 0:
        return IntersectionClass(KIND_ZERO, 0)
    kind = KIND_POINT if coeff == 1 else KIND_POINT_MULTIPLE
    return IntersectionClass(kind, coeff)
