"""Exact integer linear algebra and finite abelian group arithmetic.

Everything here runs on Python's native arbitrary-precision integers; no
floating point, no fixed-width overflow.  The two central tools are

* the Smith normal form of an integer matrix ``A``: unimodular ``U``, ``V``
  with ``U @ A @ V`` diagonal, the diagonal nonnegative and each entry
  dividing the next, and

* finite abelian groups in invariant-factor form ``Z/f1 x ... x Z/fk``
  with ``f1 | f2 | ... | fk`` and every ``fi >= 2``, together with element
  arithmetic, duals, and subgroup enumeration.

Duality note: for a finite diagonalizable group scheme, the character group
of the Cartier dual has the same invariant factors, so duals are modeled
combinatorially here.  This silently assumes the base field has enough roots
of unity (characteristic not dividing the group order); callers who care
about small characteristic must track that hypothesis themselves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod

__all__ = [
    "GroupMismatchError",
    "IntegerMatrix",
    "SmithDecomposition",
    "FiniteAbelianGroup",
    "GroupElement",
    "Subgroup",
    "smith_normal_form",
    "cokernel",
    "dual_group",
    "unimodular_inverse",
    "generated_subgroup",
    "enumerate_subgroups",
    "SUBGROUP_ORDER_BOUND",
]

#: Default ceiling on the ambient group order for exhaustive subgroup search.
SUBGROUP_ORDER_BOUND = 10_000


class GroupMismatchError(ValueError):
    """Raised when combining elements of structurally different groups."""


# ---------------------------------------------------------------------------
# integer matrices
# ---------------------------------------------------------------------------


class IntegerMatrix:
    """An immutable rows x cols matrix over the integers.

    Entries are stored row-major as a tuple of Python ints, so all
    arithmetic is exact at any magnitude.  Degenerate shapes (zero rows or
    zero columns) are allowed; pass ``cols=`` when there are no rows to fix
    the width.

    >>> IntegerMatrix([[2, -1], [-1, 2]]).det()
    3
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries, cols: int | None = None):
        data = [list(row) for row in entries]
        nrows = len(data)
        if nrows == 0:
            if cols is None:
                cols = 0
            ncols = cols
        else:
            ncols = len(data[0])
            if cols is not None and cols != ncols:
                raise ValueError(f"cols={cols} disagrees with row width {ncols}")
        flat: list[int] = []
        for row in data:
            if len(row) != ncols:
                raise ValueError("rows of unequal length")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"matrix entry {x!r} is not an integer")
                flat.append(x)
        self.rows = nrows
        self.cols = ncols
        self._entries = tuple(flat)

    # -- construction helpers -------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, diag) -> "IntegerMatrix":
        diag = list(diag)
        n = len(diag)
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns, rows: int) -> "IntegerMatrix":
        """Build a matrix with the given height from a list of columns."""
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ValueError("column of wrong height")
        return cls([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    # -- access ----------------------------------------------------------

    def __getitem__(self, key) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {key} out of range for {self.rows}x{self.cols}")
        return self._entries[i * self.cols + j]

    def row_lists(self) -> list[list[int]]:
        c = self.cols
        return [list(self._entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> list[int]:
        return [self[i, j] for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic -------------------------------------------------------

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.row_lists(), other.row_lists()
        out = [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
               for i in range(self.rows)]
        return IntegerMatrix(out, cols=other.cols)

    def apply(self, vector) -> list[int]:
        """Matrix-vector product (vector as a plain list of ints)."""
        vec = list(vector)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum(self[i, k] * vec[k] for k in range(self.cols)) for i in range(self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix([[self[i, j] for i in range(self.rows)] for j in range(self.cols)],
                             cols=self.rows)

    def det(self) -> int:
        """Exact determinant by the Bareiss fraction-free elimination."""
        if not self.is_square:
            raise ValueError("determinant requires a square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.row_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if pivot_row is None:
                    return 0
                m[k], m[pivot_row] = m[pivot_row], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    # Bareiss update: division is exact over Z
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    # -- dunder plumbing ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntegerMatrix)
                and self.rows == other.rows
                and self.cols == other.cols
                and self._entries == other._entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.row_lists()!r})"

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"<empty {self.rows}x{self.cols}>"
        text = [[str(x) for x in row] for row in self.row_lists()]
        widths = [max(len(text[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        return "\n".join(
            "[" + "  ".join(t.rjust(w) for t, w in zip(row, widths)) + "]" for row in text
        )


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """Result of ``smith_normal_form``: ``left @ a @ right`` is diagonal.

    ``d`` is the diagonal of length ``min(rows, cols)``; entries are
    nonnegative, zeros trail, and each nonzero entry divides the next.
    ``left`` and ``right`` are unimodular (determinant +-1).
    """

    d: tuple[int, ...]
    left: IntegerMatrix
    right: IntegerMatrix

    def diagonal_matrix(self) -> IntegerMatrix:
        rows, cols = self.left.rows, self.right.rows
        return IntegerMatrix(
            [[self.d[i] if i == j and i < len(self.d) else 0 for j in range(cols)]
             for i in range(rows)],
            cols=cols,
        )


def _swap_rows(m: list[list[int]], u: list[list[int]], a: int, b: int) -> None:
    if a != b:
        m[a], m[b] = m[b], m[a]
        u[a], u[b] = u[b], u[a]


def _swap_cols(m: list[list[int]], v: list[list[int]], a: int, b: int) -> None:
    if a != b:
        for row in m:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]


def _add_row(m: list[list[int]], u: list[list[int]], dst: int, src: int, coef: int) -> None:
    """row[dst] += coef * row[src], mirrored on the row transform."""
    md, ms = m[dst], m[src]
    for j in range(len(md)):
        md[j] += coef * ms[j]
    ud, us = u[dst], u[src]
    for j in range(len(ud)):
        ud[j] += coef * us[j]


def _add_col(m: list[list[int]], v: list[list[int]], dst: int, src: int, coef: int) -> None:
    """col[dst] += coef * col[src], mirrored on the column transform."""
    for row in m:
        row[dst] += coef * row[src]
    for row in v:
        row[dst] += coef * row[src]


def _negate_row(m: list[list[int]], u: list[list[int]], i: int) -> None:
    m[i] = [-x for x in m[i]]
    u[i] = [-x for x in u[i]]


def _find_pivot(m: list[list[int]], t: int, rows: int, cols: int) -> tuple[int, int] | None:
    """Nonzero entry of smallest absolute value in the trailing submatrix."""
    best = None
    best_val = 0
    for i in range(t, rows):
        row = m[i]
        for j in range(t, cols):
            e = row[j]
            if e != 0 and (best is None or abs(e) < best_val):
                best = (i, j)
                best_val = abs(e)
                if best_val == 1:
                    return best
    return best


def smith_normal_form(a: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form with explicit unimodular transforms.

    Pivots are chosen as the smallest-in-absolute-value nonzero entry of the
    trailing submatrix, which keeps intermediate entries small in practice.
    Row and column Euclidean steps clear the pivot cross; whenever the pivot
    fails to divide some remaining entry, that entry's row is folded into
    the pivot row and clearing resumes, which is what forces the divisibility
    chain ``d[i] | d[i+1]``.

    >>> smith_normal_form(IntegerMatrix([[2, -1], [-1, 2]])).d
    (1, 3)
    """
    rows, cols = a.rows, a.cols
    m = a.row_lists()
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    limit = min(rows, cols)

    for t in range(limit):
        while True:
            pivot = _find_pivot(m, t, rows, cols)
            if pivot is None:
                break
            _swap_rows(m, u, t, pivot[0])
            _swap_cols(m, v, t, pivot[1])
            p = m[t][t]
            # One Euclidean sweep of the pivot cross.  Any nonzero remainder
            # is a strictly smaller pivot candidate, so loop back and re-pick
            # rather than keep grinding with a stale pivot; re-picking every
            # sweep is what keeps intermediate entries from exploding.
            clean = True
            for i in range(rows):
                if i == t or m[i][t] == 0:
                    continue
                _add_row(m, u, i, t, -(m[i][t] // p))
                if m[i][t] != 0:
                    clean = False
            if not clean:
                continue
            for j in range(cols):
                if j == t or m[t][j] == 0:
                    continue
                _add_col(m, v, j, t, -(m[t][j] // p))
                if m[t][j] != 0:
                    clean = False
            if not clean:
                continue
            # Pivot cross is clear.  Force the divisibility chain: folding an
            # offending row into row t plants an entry the pivot fails to
            # divide, so the next sweep strictly shrinks the pivot.
            offender = None
            for i in range(t + 1, rows):
                row = m[i]
                if any(row[j] % p for j in range(t + 1, cols)):
                    offender = i
                    break
            if offender is None:
                break
            _add_row(m, u, t, offender, 1)

    for i in range(limit):
        if m[i][i] < 0:
            _negate_row(m, u, i)

    return SmithDecomposition(
        d=tuple(m[i][i] for i in range(limit)),
        left=IntegerMatrix(u, cols=rows),
        right=IntegerMatrix(v, cols=cols),
    )


def unimodular_inverse(a: IntegerMatrix) -> IntegerMatrix:
    """Exact inverse of a unimodular integer matrix.

    Gauss-Jordan over ``fractions.Fraction``; raises ``ValueError`` if the
    input is singular or the inverse is not integral.
    """
    if not a.is_square:
        raise ValueError("inverse requires a square matrix")
    n = a.rows
    work = [[Fraction(x) for x in row] for row in a.row_lists()]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot_row is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        scale = work[col][col]
        work[col] = [x / scale for x in work[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                coef = work[r][col]
                work[r] = [x - coef * y for x, y in zip(work[r], work[col])]
                inv[r] = [x - coef * y for x, y in zip(inv[r], inv[col])]
    out: list[list[int]] = []
    for row in inv:
        out_row = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular; inverse is not integral")
            out_row.append(int(x))
        out.append(out_row)
    return IntegerMatrix(out, cols=n)


# ---------------------------------------------------------------------------
# finite abelian groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finite abelian group in canonical invariant-factor form.

    ``invariant_factors`` is the ascending divisibility chain
    ``(f1, ..., fk)`` with ``f1 | f2 | ... | fk`` and every ``fi >= 2``;
    the empty tuple is the trivial group.  Elements are residue tuples,
    coordinate ``i`` taken modulo ``fi``.

    >>> str(FiniteAbelianGroup((2, 4)))
    'Z/2 x Z/4'
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        facs = tuple(int(f) for f in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        for f in facs:
            if f < 2:
                raise ValueError(f"invariant factor {f} < 2 (units are dropped, 0 is not finite)")
        for a, b in zip(facs, facs[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors {facs} violate the divisibility chain")

    @classmethod
    def from_cyclic_moduli(cls, moduli) -> "FiniteAbelianGroup":
        """Canonical form of ``Z/m1 x ... x Z/mn`` for arbitrary ``mi >= 1``.

        The moduli need not form a chain; the Smith normal form of
        ``diag(m1, ..., mn)`` sorts that out.

        >>> FiniteAbelianGroup.from_cyclic_moduli([2, 3]).invariant_factors
        (6,)
        """
        moduli = [int(m) for m in moduli]
        if any(m < 1 for m in moduli):
            raise ValueError("cyclic moduli must be positive integers")
        d = smith_normal_form(IntegerMatrix.diagonal(moduli)).d
        return cls(tuple(x for x in d if x > 1))

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def order(self) -> int:
        return prod(self.invariant_factors)

    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def element(self, coords) -> "GroupElement":
        return GroupElement(self, tuple(coords))

    def elements(self):
        """Iterate over all elements in lexicographic coordinate order."""
        for coords in itertools.product(*(range(f) for f in self.invariant_factors)):
            yield GroupElement(self, coords)

    def to_json(self) -> list[int]:
        return list(self.invariant_factors)

    @classmethod
    def from_json(cls, data) -> "FiniteAbelianGroup":
        return cls(tuple(int(x) for x in data))

    def __str__(self) -> str:
        if self.is_trivial:
            return "trivial"
        return " x ".join(f"Z/{f}" for f in self.invariant_factors)


def dual_group(b: FiniteAbelianGroup) -> FiniteAbelianGroup:
    """Character group of ``b``.

    A finite abelian group is non-canonically isomorphic to its dual, so the
    invariant factors are unchanged; this exists as an explicit operation so
    that call sites say what they mean.
    """
    return FiniteAbelianGroup(b.invariant_factors)


@dataclass(frozen=True)
class GroupElement:
    """An element of a :class:`FiniteAbelianGroup`, stored reduced.

    Arithmetic is by operators: ``x + y``, ``-x``, ``x - y``, ``n * x``.
    Mixing elements of structurally different groups raises
    :class:`GroupMismatchError`.
    """

    group: FiniteAbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        facs = self.group.invariant_factors
        raw = tuple(self.coords)
        if len(raw) != len(facs):
            raise ValueError(f"expected {len(facs)} coordinates, got {len(raw)}")
        reduced = []
        for x, f in zip(raw, facs):
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"coordinate {x!r} is not an integer")
            reduced.append(x % f)
        object.__setattr__(self, "coords", tuple(reduced))

    def _check(self, other: "GroupElement") -> None:
        if not isinstance(other, GroupElement):
            raise TypeError(f"cannot combine GroupElement with {type(other).__name__}")
        if other.group != self.group:
            raise GroupMismatchError(
                f"elements live in different groups: {self.group} vs {other.group}"
            )

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self + (-other)

    def __rmul__(self, n: int) -> "GroupElement":
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        return GroupElement(self.group, tuple(n * a for a in self.coords))

    @property
    def is_identity(self) -> bool:
        return all(x == 0 for x in self.coords)

    def element_order(self) -> int:
        """Smallest ``n >= 1`` with ``n * self`` the identity."""
        n = 1
        for x, f in zip(self.coords, self.group.invariant_factors):
            if x:
                step = f // _gcd(x, f)
                n = n * step // _gcd(n, step)
        return n

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "coords": list(self.coords)}

    @classmethod
    def from_json(cls, data) -> "GroupElement":
        return cls(FiniteAbelianGroup.from_json(data["group"]),
                   tuple(int(x) for x in data["coords"]))

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# cokernels
# ---------------------------------------------------------------------------


def cokernel(a: IntegerMatrix) -> tuple[FiniteAbelianGroup, int]:
    """Cokernel of ``a`` viewed as a map ``Z^cols -> Z^rows``.

    Returns ``(torsion, free_rank)``: the finite part in invariant-factor
    form (diagonal entries equal to 1 are dropped) and the rank of the free
    part (zero diagonal entries plus the row surplus when ``rows > cols``).

    >>> cokernel(IntegerMatrix([[2, -1], [-1, 2]]))[0].invariant_factors
    (3,)
    """
    d = smith_normal_form(a).d
    torsion = tuple(x for x in d if x > 1)
    free_rank = sum(1 for x in d if x == 0) + max(0, a.rows - a.cols)
    return FiniteAbelianGroup(torsion), free_rank


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a finite abelian group, canonicalized by element set.

    ``elements`` is the full sorted element list (sorted by coordinate
    tuples), which is the identity of record: two subgroups are the same
    subgroup exactly when these lists agree.  ``structure`` is the abstract
    isomorphism type, computed from a relation matrix.
    """

    ambient: FiniteAbelianGroup
    generators: tuple[GroupElement, ...]
    structure: FiniteAbelianGroup
    elements: tuple[GroupElement, ...]

    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: GroupElement) -> bool:
        return x in self.elements


def _closure(group: FiniteAbelianGroup, generators) -> list[tuple[int, ...]]:
    """All coordinate tuples of the subgroup generated by ``generators``."""
    facs = group.invariant_factors
    zero = (0,) * len(facs)
    gens = [g.coords for g in generators]
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = tuple((a + b) % f for a, b, f in zip(s, g, facs))
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(seen)


def generated_subgroup(group: FiniteAbelianGroup, generators) -> Subgroup:
    """Subgroup of ``group`` generated by the given elements.

    The abstract structure comes from a relation matrix: with generators
    ``v1..vk`` in ``Z^n / diag(f)``, the kernel of ``Z^k -> group`` is the
    projection to the first ``k`` coordinates of the integer kernel of the
    block matrix ``[V | diag(f)]``, and the subgroup is the cokernel of that
    kernel lattice.  Both steps are Smith normal form computations.
    """
    generators = tuple(generators)
    for g in generators:
        if not isinstance(g, GroupElement):
            raise TypeError("generators must be GroupElement instances")
        if g.group != group:
            raise GroupMismatchError("generator does not belong to the ambient group")

    elements = tuple(GroupElement(group, c) for c in _closure(group, generators))
    if not generators:
        return Subgroup(group, (), FiniteAbelianGroup(()), elements)

    facs = group.invariant_factors
    n, k = len(facs), len(generators)
    block = [[generators[j].coords[i] for j in range(k)]
             + [facs[i] if i == jj else 0 for jj in range(n)]
             for i in range(n)]
    dec = smith_normal_form(IntegerMatrix(block, cols=k + n))
    kernel_cols = [j for j in range(k + n) if j >= len(dec.d) or dec.d[j] == 0]
    relations = IntegerMatrix.from_columns(
        [[dec.right[i, j] for i in range(k)] for j in kernel_cols], rows=k
    )
    structure, free_rank = cokernel(relations)
    if free_rank != 0:
        raise RuntimeError("subgroup of a finite group reported infinite structure")
    return Subgroup(group, generators, structure, elements)


def enumerate_subgroups(group: FiniteAbelianGroup,
                        max_order: int = SUBGROUP_ORDER_BOUND) -> list[Subgroup]:
    """All subgroups of ``group``, each listed exactly once.

    Join-closure search: starting from the trivial subgroup, repeatedly
    extend by a cyclic subgroup (the set of pairwise sums of two subgroups
    is already a subgroup, so joins need no extra closure pass).  Candidates
    are deduplicated by their sorted element sets.  The result is sorted by
    (order, element list), so it is deterministic.

    >>> [s.order() for s in enumerate_subgroups(FiniteAbelianGroup((4,)))]
    [1, 2, 4]
    """
    order = group.order()
    if order > max_order:
        raise ValueError(f"group order {order} exceeds subgroup enumeration bound {max_order}")

    facs = group.invariant_factors
    zero = (0,) * len(facs)
    all_coords = list(itertools.product(*(range(f) for f in facs)))

    # distinct cyclic subgroups, keyed by element set, with a generator each
    cyclic: dict[frozenset, tuple[int, ...]] = {}
    for c in all_coords:
        if c == zero:
            continue
        mults = {zero}
        cur = c
        while cur != zero:
            mults.add(cur)
            cur = tuple((a + b) % f for a, b, f in zip(cur, c, facs))
        key = frozenset(mults)
        if key not in cyclic:
            cyclic[key] = c

    trivial_key = frozenset({zero})
    full_key = frozenset(all_coords)
    found: dict[frozenset, tuple[tuple[int, ...], ...]] = {trivial_key: ()}
    frontier = [trivial_key]
    while frontier:
        nxt = []
        for key in frontier:
            gens = found[key]
            members = key
            for ckey, cgen in cyclic.items():
                if cgen in members:
                    continue
                # |S + C| = |S| |C| / |S n C|; when that already fills the
                # group there is nothing to sum elementwise
                join_order = len(members) * len(ckey) // len(members & ckey)
                if join_order == order:
                    join = full_key
                else:
                    join = frozenset(
                        tuple((a + b) % f for a, b, f in zip(s, t, facs))
                        for s in members for t in ckey
                    )
                if join not in found:
                    found[join] = gens + (cgen,)
                    nxt.append(join)
        frontier = nxt

    subgroups = [
        generated_subgroup(group, tuple(GroupElement(group, g) for g in gens))
        for gens in found.values()
    ]
    subgroups.sort(key=lambda s: (s.order(), tuple(e.coords for e in s.elements)))
    return subgroups
