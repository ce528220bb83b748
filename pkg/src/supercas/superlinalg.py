"""Exact Z2-graded linear algebra.

Graded spaces, supermatrices with exact rational entries, the graded
Kronecker product, placement of multi-site operators into tensor powers,
the superpermutation and (partial) supertraces.

All scalars are ``gmpy2.mpq`` values.  Basis vectors of a tensor power are
ordered row-major over the factor indices, so factor 1 is the slowest index.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import gmpy2

Rational = type(gmpy2.mpq())

ZERO = gmpy2.mpq(0)
ONE = gmpy2.mpq(1)

# Operators with both dimensions at or below this size go through the dense
# product kernel; everything larger uses the sparse row kernel.
DENSE_LIMIT = 144


def Q(value, denominator=None) -> Rational:
    """Coerce ``value`` (int, str "p/q", Fraction, mpq) to an exact rational."""
    if denominator is not None:
        return gmpy2.mpq(value, denominator)
    if isinstance(value, Rational):
        return value
    if isinstance(value, Fraction):
        return gmpy2.mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact scalars")
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            p, q = text.split("/")
            if int(q) == 0:
                raise ValueError(f"zero denominator in {value!r}")
            return gmpy2.mpq(int(p), int(q))
        return gmpy2.mpq(int(text))
    return gmpy2.mpq(value)


def format_rational(q) -> str:
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GradedSpace:
    """A finite-dimensional superspace with a homogeneous ordered basis.

    ``factors`` is non-empty when the space was built as a tensor product;
    it keeps the factor structure needed by partial supertraces and index
    splitting.
    """

    __slots__ = ("parities", "factors", "_hash")

    def __init__(self, parities: Iterable[int], factors: Sequence["GradedSpace"] = ()):
        self.parities = tuple(int(p) & 1 for p in parities)
        self.factors = tuple(factors)
        self._hash = hash((self.parities, self.factors))

    @classmethod
    def standard(cls, M: int, N: int) -> "GradedSpace":
        if M < 0 or N < 0:
            raise ValueError("M and N must be non-negative")
        return cls([0] * M + [1] * N)

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def dim_even(self) -> int:
        return self.parities.count(0)

    @property
    def dim_odd(self) -> int:
        return self.parities.count(1)

    @property
    def sdim(self) -> int:
        return self.dim_even - self.dim_odd

    def parity(self, index: int) -> int:
        return self.parities[index]

    def tensor(self, *others: "GradedSpace") -> "GradedSpace":
        return tensor(self, *others)

    def power(self, k: int) -> "GradedSpace":
        return tensor(*([self] * k))

    def split(self, index: int) -> tuple[int, ...]:
        """Factor indices of a tensor-product basis index (row-major)."""
        if not self.factors:
            return (index,)
        out = []
        for f in reversed(self.factors):
            index, r = divmod(index, f.dim)
            out.append(r)
        return tuple(reversed(out))

    def join(self, indices: Sequence[int]) -> int:
        if not self.factors:
            (index,) = indices
            return index
        index = 0
        for f, i in zip(self.factors, indices):
            index = index * f.dim + i
        return index

    def __eq__(self, other):
        if not isinstance(other, GradedSpace):
            return NotImplemented
        return self.parities == other.parities and self.factors == other.factors

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.factors:
            return "(" + " (x) ".join(repr(f) for f in self.factors) + ")"
        return f"V({self.dim_even}|{self.dim_odd})"


def tensor(*spaces: GradedSpace) -> GradedSpace:
    """Graded tensor product; nested products are flattened."""
    flat: list[GradedSpace] = []
    for s in spaces:
        flat.extend(s.factors if s.factors else (s,))
    if len(flat) == 1:
        return flat[0]
    parities = [0]
    for f in flat:
        parities = [p + q for p in parities for q in f.parities]
    return GradedSpace(parities, flat)


class SuperMatrix:
    """Immutable linear operator between graded spaces with rational entries.

    Storage is a dict of non-empty rows, each row a dict ``col -> value``
    holding only non-zero values.
    """

    __slots__ = ("row_space", "col_space", "_rows")

    def __init__(self, row_space: GradedSpace, col_space: GradedSpace, rows=None, *, _trusted=False):
        self.row_space = row_space
        self.col_space = col_space
        if _trusted:
            self._rows = rows
            return
        clean: dict[int, dict[int, Rational]] = {}
        if rows:
            nr, nc = row_space.dim, col_space.dim
            for r, row in rows.items():
                if not 0 <= r < nr:
                    raise IndexError(f"row {r} out of range")
                out = {}
                for c, v in row.items():
                    if not 0 <= c < nc:
                        raise IndexError(f"column {c} out of range")
                    v = Q(v)
                    if v:
                        out[c] = v
                if out:
                    clean[r] = out
        self._rows = clean

    # -- construction ---------------------------------------------------

    @classmethod
    def from_entries(cls, row_space, col_space, entries) -> "SuperMatrix":
        """Build from an iterable of ``((row, col), value)``; repeats accumulate."""
        rows: dict[int, dict[int, Rational]] = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for (r, c), v in items:
            row = rows.setdefault(r, {})
            row[c] = row.get(c, ZERO) + Q(v)
        return cls(row_space, col_space, rows)

    @classmethod
    def from_dense(cls, row_space, col_space, data) -> "SuperMatrix":
        rows = {r: {c: v for c, v in enumerate(line) if v} for r, line in enumerate(data)}
        return cls(row_space, col_space, rows)

    @classmethod
    def identity(cls, space: GradedSpace) -> "SuperMatrix":
        return cls(space, space, {i: {i: ONE} for i in range(space.dim)}, _trusted=True)

    @classmethod
    def zero(cls, row_space: GradedSpace, col_space: GradedSpace | None = None) -> "SuperMatrix":
        return cls(row_space, col_space or row_space, {}, _trusted=True)

    # -- access ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.row_space.dim, self.col_space.dim

    @property
    def is_square(self) -> bool:
        return self.row_space == self.col_space

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def __getitem__(self, key) -> Rational:
        r, c = key
        return self._rows.get(r, {}).get(c, ZERO)

    def row(self, r: int) -> dict[int, Rational]:
        return dict(self._rows.get(r, {}))

    def items(self) -> Iterator[tuple[tuple[int, int], Rational]]:
        """Non-zero entries sorted by (row, col)."""
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield (r, c), row[c]

    def dense(self) -> list[list[Rational]]:
        nr, nc = self.shape
        out = [[ZERO] * nc for _ in range(nr)]
        for r, row in self._rows.items():
            line = out[r]
            for c, v in row.items():
                line[c] = v
        return out

    def is_zero(self) -> bool:
        return not self._rows

    def parity_blocks(self) -> set[int]:
        """Parities ``[row] + [col]`` present among the non-zero entries."""
        rp, cp = self.row_space.parities, self.col_space.parities
        return {(rp[r] + cp[c]) & 1 for r, row in self._rows.items() for c in row}

    @property
    def is_even(self) -> bool:
        return self.parity_blocks() <= {0}

    @property
    def is_odd(self) -> bool:
        return self.parity_blocks() <= {1}

    def max_abs_numerator(self) -> int:
        return max((abs(v.numerator) for row in self._rows.values() for v in row.values()), default=0)

    # -- arithmetic -----------------------------------------------------

    def _check_same_shape(self, other):
        if self.row_space != other.row_space or self.col_space != other.col_space:
            raise ValueError("operators act between different graded spaces")

    def _combine(self, other: "SuperMatrix", sign: int) -> "SuperMatrix":
        self._check_same_shape(other)
        rows = {r: dict(row) for r, row in self._rows.items()}
        for r, orow in other._rows.items():
            row = rows.get(r)
            if row is None:
                rows[r] = {c: v if sign > 0 else -v for c, v in orow.items()}
                continue
            for c, v in orow.items():
                s = row.get(c, ZERO) + (v if sign > 0 else -v)
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
            if not row:
                del rows[r]
        return SuperMatrix(self.row_space, self.col_space, rows, _trusted=True)

    def __add__(self, other):
        if isinstance(other, SuperMatrix):
            return self._combine(other, 1)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, SuperMatrix):
            return self._combine(other, -1)
        return NotImplemented

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k) -> "SuperMatrix":
        k = Q(k)
        if not k:
            return SuperMatrix.zero(self.row_space, self.col_space)
        rows = {r: {c: v * k for c, v in row.items()} for r, row in self._rows.items()}
        return SuperMatrix(self.row_space, self.col_space, rows, _trusted=True)

    def __mul__(self, k):
        if isinstance(k, SuperMatrix):
            return NotImplemented
        return self.scale(k)

    __rmul__ = __mul__

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        if self.col_space != other.row_space:
            raise ValueError("inner graded spaces do not match")
        if max(self.shape + other.shape) <= DENSE_LIMIT:
            return matmul_dense(self, other)
        return matmul_sparse(self, other)

    def __pow__(self, k: int) -> "SuperMatrix":
        if not self.is_square:
            raise ValueError("power of a non-square operator")
        result = SuperMatrix.identity(self.row_space)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def plus_scalar(self, k) -> "SuperMatrix":
        """``self + k * 1``."""
        return self + SuperMatrix.identity(self.row_space).scale(k)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (self.row_space == other.row_space and self.col_space == other.col_space
                and self._rows == other._rows)

    __hash__ = None

    def __repr__(self):
        return f"SuperMatrix({self.shape[0]}x{self.shape[1]}, nnz={self.nnz})"

    # -- graded operations ---------------------------------------------

    def supertrace(self) -> Rational:
        return supertrace(self)

    def trace(self) -> Rational:
        return trace(self)

    def to_json(self) -> dict:
        return dump_matrix(self)


def matmul_sparse(A: SuperMatrix, B: SuperMatrix) -> SuperMatrix:
    brows = B._rows
    out = {}
    for r, arow in A._rows.items():
        acc: dict[int, Rational] = {}
        get = acc.get
        for k, a in arow.items():
            brow = brows.get(k)
            if brow is None:
                continue
            for c, b in brow.items():
                acc[c] = get(c, ZERO) + a * b
        acc = {c: v for c, v in acc.items() if v}
        if acc:
            out[r] = acc
    return SuperMatrix(A.row_space, B.col_space, out, _trusted=True)


def matmul_dense(A: SuperMatrix, B: SuperMatrix) -> SuperMatrix:
    """Product through dense rows of ``B`` and a dense accumulator per output row."""
    nc = B.shape[1]
    bd = B.dense()
    out = {}
    for r, arow in A._rows.items():
        acc = [ZERO] * nc
        for k, a in arow.items():
            line = bd[k]
            for c in range(nc):
                y = line[c]
                if y:
                    acc[c] += a * y
        row = {c: v for c, v in enumerate(acc) if v}
        if row:
            out[r] = row
    return SuperMatrix(A.row_space, B.col_space, out, _trusted=True)


def linear_combination(terms: Iterable[tuple[object, SuperMatrix]]) -> SuperMatrix:
    """Sum of ``coeff * operator`` over ``terms``."""
    result = None
    for k, op in terms:
        k = Q(k)
        if not k:
            if result is None:
                result = SuperMatrix.zero(op.row_space, op.col_space)
            continue
        piece = op if k == 1 else op.scale(k)
        result = piece if result is None else result + piece
    if result is None:
        raise ValueError("empty linear combination")
    return result


def graded_commutator(A: SuperMatrix, B: SuperMatrix) -> SuperMatrix:
    """``AB - (-1)^{[A][B]} BA`` for homogeneous ``A`` and ``B``."""
    pa = 1 if (A.is_odd and not A.is_zero()) else 0
    pb = 1 if (B.is_odd and not B.is_zero()) else 0
    if not (A.is_even or A.is_odd) or not (B.is_even or B.is_odd):
        raise ValueError("graded commutator needs homogeneous operators")
    if pa and pb:
        return A @ B + B @ A
    return A @ B - B @ A


def graded_kron(A: SuperMatrix, B: SuperMatrix) -> SuperMatrix:
    """Graded tensor product with sign ``(-1)^{([alpha]+[beta])[i]}``."""
    row_space = tensor(A.row_space, B.row_space)
    col_space = tensor(A.col_space, B.col_space)
    bp_row, bp_col = B.row_space.parities, B.col_space.parities
    ap_col = A.col_space.parities
    nbr, nbc = B.shape
    out: dict[int, dict[int, Rational]] = {}
    b_items = [(beta, alpha, v, (bp_row[beta] + bp_col[alpha]) & 1)
               for beta, row in B._rows.items() for alpha, v in row.items()]
    for k, arow in A._rows.items():
        for i, a in arow.items():
            odd_i = ap_col[i]
            for beta, alpha, b, pb in b_items:
                v = a * b
                if odd_i and pb:
                    v = -v
                out.setdefault(k * nbr + beta, {})[i * nbc + alpha] = v
    return SuperMatrix(row_space, col_space, out, _trusted=True)


def tensor_sign(parities: Sequence[int], rows: Sequence[int], cols: Sequence[int]) -> int:
    """Sign of the n-fold graded tensor product entry for factor indices.

    ``(-1)^{sum_p (sum_{q<p} [m_q]) ([k_p] + [m_p])}`` with ``k = rows``,
    ``m = cols``.
    """
    acc = 0
    before = 0
    for k, m in zip(rows, cols):
        pk, pm = parities[k], parities[m]
        acc += before * (pk + pm)
        before += pm
    return -1 if acc & 1 else 1


def _factor_space(space: GradedSpace) -> GradedSpace:
    if not space.factors:
        return space
    first = space.factors[0]
    if any(f != first for f in space.factors):
        raise ValueError("placement needs a tensor power of a single space")
    return first


def place(A: SuperMatrix, positions: Sequence[int], s: int) -> SuperMatrix:
    """Embed an operator on ``V^{(x)r}`` into ``V^{(x)s}`` at 1-based ``positions``.

    The coefficient tensor of ``A`` in the basis of matrix units is placed so
    that the unit acting on factor ``k`` of ``A`` sits at ``positions[k]``;
    identities fill the remaining slots.
    """
    positions = [int(p) for p in positions]
    r = len(positions)
    if r == 0 or r > s:
        raise ValueError("need 1 <= len(positions) <= s")
    if any(p < 1 or p > s for p in positions):
        raise ValueError(f"position out of range 1..{s}: {positions}")
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise ValueError(f"positions must be strictly increasing: {positions}")
    if not A.is_square:
        raise ValueError("placement needs a square operator")
    V = _factor_space(A.row_space)
    if (len(A.row_space.factors) or 1) != r:
        raise ValueError("operator factor count does not match positions")
    par = V.parities
    d = V.dim
    target = V.power(s)
    slots = [p - 1 for p in positions]
    free = [q for q in range(s) if q not in slots]
    fills = list(itertools.product(range(d), repeat=len(free)))
    out: dict[int, dict[int, Rational]] = {}
    for (ri, ci), v in A.items():
        kr = A.row_space.split(ri)
        mr = A.col_space.split(ci)
        coeff = v * tensor_sign(par, kr, mr)
        k = [0] * s
        m = [0] * s
        for slot, a, b in zip(slots, kr, mr):
            k[slot] = a
            m[slot] = b
        for fill in fills:
            for q, x in zip(free, fill):
                k[q] = x
                m[q] = x
            val = coeff if tensor_sign(par, k, m) > 0 else -coeff
            out.setdefault(target.join(k), {})[target.join(m)] = val
    return SuperMatrix(target, target, out, _trusted=True)


def place_pair(A: SuperMatrix, a: int, b: int, s: int) -> SuperMatrix:
    """Two-site operator with its first factor at slot ``a`` and second at ``b``.

    For ``a > b`` this is ``(P A P)`` placed at ``(b, a)``.
    """
    if a == b:
        raise ValueError("a two-site operator needs two distinct slots")
    if a < b:
        return place(A, [a, b], s)
    P = superperm(_factor_space(A.row_space))
    return place(P @ A @ P, [b, a], s)


def superperm(V: GradedSpace) -> SuperMatrix:
    """Graded swap on ``V (x) V``: ``P^{k1 k2}_{m1 m2} = (-1)^{[k1][k2]} d^{k1}_{m2} d^{k2}_{m1}``."""
    W = tensor(V, V)
    d = V.dim
    par = V.parities
    rows = {}
    for k1 in range(d):
        for k2 in range(d):
            rows[k1 * d + k2] = {k2 * d + k1: -ONE if par[k1] & par[k2] else ONE}
    return SuperMatrix(W, W, rows, _trusted=True)


def supertrace(A: SuperMatrix) -> Rational:
    if not A.is_square:
        raise ValueError("supertrace of a non-square operator")
    par = A.row_space.parities
    s = ZERO
    for r, row in A._rows.items():
        v = row.get(r)
        if v:
            s = s - v if par[r] else s + v
    return s


def trace(A: SuperMatrix) -> Rational:
    if not A.is_square:
        raise ValueError("trace of a non-square operator")
    s = ZERO
    for r, row in A._rows.items():
        v = row.get(r)
        if v:
            s += v
    return s


def partial_supertrace_second(A: SuperMatrix) -> SuperMatrix:
    """``(str_2 A)^i_j = sum_beta (-1)^{[beta]} A^{i beta}_{j beta}``."""
    if not A.is_square or len(A.row_space.factors) != 2:
        raise ValueError("partial supertrace needs an operator on a declared two-factor space")
    V, W = A.row_space.factors
    wpar = W.parities
    dw = W.dim
    out: dict[int, dict[int, Rational]] = {}
    for r, row in A._rows.items():
        i, beta = divmod(r, dw)
        odd = wpar[beta]
        for c, v in row.items():
            j, beta2 = divmod(c, dw)
            if beta2 != beta:
                continue
            line = out.setdefault(i, {})
            line[j] = line.get(j, ZERO) + (-v if odd else v)
    out = {i: {j: v for j, v in line.items() if v} for i, line in out.items()}
    return SuperMatrix(V, V, {i: l for i, l in out.items() if l}, _trusted=True)


def dump_matrix(A: SuperMatrix) -> dict:
    """JSON-ready dump: rows, cols, parities, sorted ``[r, c, "p/q"]`` entries."""
    return {
        "rows": A.shape[0],
        "cols": A.shape[1],
        "parities": list(A.row_space.parities),
        "col_parities": list(A.col_space.parities),
        "entries": [[r, c, format_rational(v)] for (r, c), v in A.items()],
    }


def load_matrix(data: dict | str) -> SuperMatrix:
    if isinstance(data, str):
        data = json.loads(data)
    rows = GradedSpace(data["parities"])
    cols = GradedSpace(data.get("col_parities", data["parities"]))
    return SuperMatrix.from_entries(rows, cols, (((r, c), Q(v)) for r, c, v in data["entries"]))


def transpose(A: SuperMatrix) -> SuperMatrix:
    """Plain (ungraded) transpose of the coefficient array."""
    rows: dict[int, dict[int, Rational]] = {}
    for r, row in A._rows.items():
        for c, v in row.items():
            rows.setdefault(c, {})[r] = v
    return SuperMatrix(A.col_space, A.row_space, rows, _trusted=True)


def _gauss_jordan(data: list[list[Rational]], ncols: int) -> tuple[list[list[Rational]], list[int]]:
    """Reduced row echelon form of ``data`` (modified in place) and pivot columns."""
    pivots = []
    r = 0
    nrows = len(data)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if data[i][c]), None)
        if p is None:
            continue
        data[r], data[p] = data[p], data[r]
        lead = data[r][c]
        if lead != 1:
            inv = 1 / lead
            data[r] = [x * inv for x in data[r]]
        pr = data[r]
        nz = [j for j, x in enumerate(pr) if x]
        for i in range(nrows):
            if i != r:
                f = data[i][c]
                if f:
                    row = data[i]
                    for j in nz:
                        row[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    return data, pivots


def rank(A: SuperMatrix) -> int:
    _, pivots = _gauss_jordan(A.dense(), A.shape[1])
    return len(pivots)


def inverse(A: SuperMatrix) -> SuperMatrix:
    """Exact inverse of a square operator; ``ValueError`` if singular."""
    n, m = A.shape
    if n != m:
        raise ValueError("inverse of a non-square operator")
    aug = [line + [ONE if i == j else ZERO for j in range(n)] for i, line in enumerate(A.dense())]
    red, pivots = _gauss_jordan(aug, n)
    if pivots != list(range(n)):
        raise ValueError("operator is singular")
    return SuperMatrix.from_dense(A.col_space, A.row_space, [line[n:] for line in red])


def left_inverse(B: SuperMatrix) -> SuperMatrix:
    """A left inverse ``L`` with ``L @ B = 1`` for an injective ``B``.

    ``L`` is supported on a set of pivot rows of ``B``.
    """
    n, d = B.shape
    _, pivots = _gauss_jordan(transpose(B).dense(), n)
    if len(pivots) != d:
        raise ValueError("operator is not injective")
    dense = B.dense()
    square = SuperMatrix.from_dense(GradedSpace([0] * d), B.col_space, [dense[p] for p in pivots])
    sinv = inverse(square)
    rows = {}
    for r, row in sinv._rows.items():
        rows[r] = {pivots[k]: v for k, v in row.items()}
    return SuperMatrix(B.col_space, B.row_space, rows, _trusted=True)


def outer(left: SuperMatrix, right: SuperMatrix) -> SuperMatrix:
    """Operator on ``W (x) W`` with entries ``left[i1, i2] * right[j1, j2]``.

    Row index ``(i1, i2)``, column index ``(j1, j2)``; used for operators of
    the form ``gbar^{i1 i2} g_{j1 j2}``.
    """
    W = left.row_space
    space = tensor(W, W)
    d = W.dim
    lv = [(r * d + c, v) for (r, c), v in left.items()]
    rv = {r * d + c: v for (r, c), v in right.items()}
    rows = {i: {j: a * b for j, b in rv.items()} for i, a in lv}
    return SuperMatrix(space, space, rows, _trusted=True)
