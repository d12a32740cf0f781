"""Dense exact matrices over Q(i) ("C") and the rational quaternions ("H").

A :class:`Matrix` is immutable.  Matrix products use ``@`` (``*`` is the same
thing, kept because it reads naturally in formulas).  Scalars never multiply
a matrix through an operator: quaternionic scalars do not commute, so
:meth:`Matrix.rscale` (``A c``) and :meth:`Matrix.lscale` (``c A``) are
separate, explicit calls.  Eigenvector relations use the right action.
"""

from fractions import Fraction
from itertools import chain

from .errors import DimensionError, SingularMatrixError
from .scalars import GaussianRational, RationalQuaternion, complex_join, complex_split, parse_scalar

FIELDS = ("C", "H")
_ZERO = {"C": GaussianRational(0), "H": RationalQuaternion(0)}
_ONE = {"C": GaussianRational(1), "H": RationalQuaternion(1)}


def scalar(x, field):
    """Coerce ``x`` (int, Fraction, str or scalar object) into ``field``."""
    if field == "C":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, RationalQuaternion):
            if not x.is_complex():
                raise DimensionError(f"{x} is not a complex number")
            a0, a1, _, _ = x.coefficients
            return GaussianRational(a0, a1)
        if isinstance(x, str):
            return parse_scalar(x, "C")
        return GaussianRational(x)
    if field == "H":
        if isinstance(x, RationalQuaternion):
            return x
        if isinstance(x, str):
            return parse_scalar(x, "H")
        return RationalQuaternion(x)
    raise DimensionError(f"unknown field {field!r}")


class Matrix:
    __slots__ = ("field", "rows")

    def __init__(self, rows, field="C"):
        if field not in FIELDS:
            raise DimensionError(f"unknown field {field!r}")
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("matrices must be at least 1x1")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        self.field = field
        self.rows = tuple(tuple(scalar(x, field) for x in r) for r in rows)

    @classmethod
    def _wrap(cls, rows, field):
        m = object.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        return m

    # construction

    @classmethod
    def identity(cls, n, field="C"):
        z, o = _ZERO[field], _ONE[field]
        return cls._wrap([[o if i == j else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, m, n=None, field="C"):
        n = m if n is None else n
        return cls._wrap([[_ZERO[field]] * n for _ in range(m)], field)

    @classmethod
    def diag(cls, values, field="C"):
        vals = [scalar(v, field) for v in values]
        z = _ZERO[field]
        n = len(vals)
        return cls._wrap([[vals[i] if i == j else z for j in range(n)] for i in range(n)], field)

    # shape and access

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    @property
    def shape(self):
        return self.nrows, self.ncols

    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def submatrix(self, rows, cols):
        return Matrix._wrap([[self.rows[i][j] for j in cols] for i in rows], self.field)

    def to_field(self, field):
        if field == self.field:
            return self
        return Matrix._wrap([[scalar(x, field) for x in r] for r in self.rows], field)

    def entries(self):
        return chain.from_iterable(self.rows)

    # arithmetic

    def _align(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("matrix operand expected; use rscale/lscale for scalars")
        if self.field == other.field:
            return self, other, self.field
        return self.to_field("H"), other.to_field("H"), "H"

    def __add__(self, other):
        a, b, f = self._align(other)
        if a.shape != b.shape:
            raise DimensionError(f"cannot add {a.shape} and {b.shape}")
        return Matrix._wrap([[x + y for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows)], f)

    def __sub__(self, other):
        a, b, f = self._align(other)
        if a.shape != b.shape:
            raise DimensionError(f"cannot subtract {b.shape} from {a.shape}")
        return Matrix._wrap([[x - y for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows)], f)

    def __neg__(self):
        return Matrix._wrap([[-x for x in r] for r in self.rows], self.field)

    def __matmul__(self, other):
        a, b, f = self._align(other)
        if a.ncols != b.nrows:
            raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
        zero = _ZERO[f]
        bcols = list(zip(*b.rows))
        out = []
        for r in a.rows:
            nz = [(k, x) for k, x in enumerate(r) if x]
            row = []
            for col in bcols:
                acc = zero
                for k, x in nz:
                    y = col[k]
                    if y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix._wrap(out, f)

    __mul__ = __matmul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out, base = Matrix.identity(self.nrows, self.field), self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def rscale(self, c):
        """A c: every entry multiplied by ``c`` on the right."""
        c = scalar(c, self.field if not isinstance(c, RationalQuaternion) else "H")
        a = self if not isinstance(c, RationalQuaternion) else self.to_field("H")
        return Matrix._wrap([[x * c for x in r] for r in a.rows], a.field)

    def lscale(self, c):
        """c A: every entry multiplied by ``c`` on the left."""
        c = scalar(c, self.field if not isinstance(c, RationalQuaternion) else "H")
        a = self if not isinstance(c, RationalQuaternion) else self.to_field("H")
        return Matrix._wrap([[c * x for x in r] for r in a.rows], a.field)

    def transpose(self):
        return Matrix._wrap(list(zip(*self.rows)), self.field)

    def conj(self):
        return Matrix._wrap([[x.conjugate() for x in r] for r in self.rows], self.field)

    def conj_transpose(self):
        return self.conj().transpose()

    def trace(self):
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        acc = _ZERO[self.field]
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self):
        return not any(self.entries())

    def is_identity(self):
        return self.is_square() and self == Matrix.identity(self.nrows, self.field)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for x, y in zip(self.entries(), other.entries()))

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        w = max(len(c) for c in chain.from_iterable(cells))
        return "\n".join("[" + "  ".join(c.rjust(w) for c in r) + "]" for r in cells)

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.rows]!r}, field={self.field!r})"


# block constructors

def block_diag(blocks):
    """A_1 (+) ... (+) A_r for square blocks over a common field."""
    blocks = list(blocks)
    if not blocks:
        raise DimensionError("block_diag of nothing")
    if any(not b.is_square() for b in blocks):
        raise DimensionError("block_diag needs square blocks")
    field = "H" if any(b.field == "H" for b in blocks) else "C"
    blocks = [b.to_field(field) for b in blocks]
    n = sum(b.nrows for b in blocks)
    z = _ZERO[field]
    rows = []
    off = 0
    for b in blocks:
        for r in b.rows:
            rows.append([z] * off + list(r) + [z] * (n - off - b.ncols))
        off += b.ncols
    return Matrix._wrap(rows, field)


def block_matrix(grid):
    """Assemble a matrix from a 2-D grid of blocks (``None`` means zero)."""
    heights = []
    for row in grid:
        hs = {b.nrows for b in row if b is not None}
        if len(hs) != 1:
            raise DimensionError("inconsistent block heights")
        heights.append(hs.pop())
    widths = []
    for j in range(len(grid[0])):
        ws = {row[j].ncols for row in grid if row[j] is not None}
        if len(ws) != 1:
            raise DimensionError("inconsistent block widths")
        widths.append(ws.pop())
    field = "H" if any(b is not None and b.field == "H" for row in grid for b in row) else "C"
    z = _ZERO[field]
    rows = []
    for row, h in zip(grid, heights):
        for i in range(h):
            line = []
            for b, w in zip(row, widths):
                line.extend(b.to_field(field).rows[i] if b is not None else [z] * w)
            rows.append(line)
    return Matrix._wrap(rows, field)


def antidiag_pair(upper, lower):
    """[[0, U], [L, 0]]."""
    if not (upper.is_square() and lower.is_square()):
        raise DimensionError("antidiag_pair needs square blocks")
    return block_matrix([[None, upper], [lower, None]])


# the complex embedding of quaternionic matrices

def split_matrix(A):
    """A = A1 + A2 j with A1, A2 complex."""
    if A.field == "C":
        return A, Matrix.zeros(A.nrows, A.ncols, "C")
    parts = [[complex_split(x) for x in r] for r in A.rows]
    A1 = Matrix._wrap([[p[0] for p in r] for r in parts], "C")
    A2 = Matrix._wrap([[p[1] for p in r] for r in parts], "C")
    return A1, A2


def join_matrix(A1, A2):
    """A1 + A2 j as a quaternionic matrix."""
    return Matrix._wrap([[complex_join(x, y) for x, y in zip(r, s)]
                         for r, s in zip(A1.rows, A2.rows)], "H")


def phi_embed(A):
    """Phi(A) = [[A1, A2], [-conj(A2), conj(A1)]] for A = A1 + A2 j."""
    if not A.is_square():
        raise DimensionError("phi_embed needs a square matrix")
    A1, A2 = split_matrix(A)
    return block_matrix([[A1, A2], [-A2.conj(), A1.conj()]])


def phi_project(M):
    """Recover A from Phi(A); refuses matrices outside the image of Phi."""
    if M.field != "C" or not M.is_square() or M.nrows % 2:
        raise DimensionError("phi_project needs an even-sized complex matrix")
    n = M.nrows // 2
    lo, hi = range(n), range(n, 2 * n)
    A1, A2 = M.submatrix(lo, lo), M.submatrix(lo, hi)
    if M.submatrix(hi, lo) != -A2.conj() or M.submatrix(hi, hi) != A1.conj():
        raise DimensionError("matrix is not in the image of Phi")
    return join_matrix(A1, A2)


def det_H(A):
    """det(Phi(A)), a nonnegative Fraction."""
    d = det_C(phi_embed(A.to_field("H")))
    if not d.is_real():
        raise AssertionError(f"det of a Phi image is not real: {d}")
    return d.re


def tr_H(A):
    return phi_embed(A.to_field("H")).trace()


def det(A):
    """Field-appropriate determinant: det_C over C, det_H over H."""
    return det_H(A) if A.field == "H" else det_C(A)


# elimination over Q(i)

def _integral_rows(A):
    """Scale each row to Gaussian-integer entries; returns rows and the product of scales."""
    rows, scale = [], 1
    for r in A.rows:
        lcm = 1
        for x in r:
            d = x._d
            lcm = lcm * d // _gcd(lcm, d)
        rows.append([x * lcm for x in r])
        scale *= lcm
    return rows, scale


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def det_C(A):
    """Exact determinant over Q(i) by Bareiss fraction-free elimination."""
    if A.field != "C":
        raise DimensionError("det_C needs a complex matrix")
    if not A.is_square():
        raise DimensionError("determinant of a non-square matrix")
    n = A.nrows
    M, scale = _integral_rows(A)
    sign = 1
    prev = GaussianRational(1)
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return GaussianRational(0)
        p = M[k][k]
        inv_prev = prev.inverse()
        for i in range(k + 1, n):
            a = M[i][k]
            Mi, Mk = M[i], M[k]
            for j in range(k + 1, n):
                Mi[j] = (p * Mi[j] - a * Mk[j]) * inv_prev
            Mi[k] = GaussianRational(0)
        prev = p
    return M[n - 1][n - 1] * Fraction(sign, scale)


def exact_rank(A):
    """Rank over Q(i) via fraction-free elimination."""
    if A.field != "C":
        raise DimensionError("exact_rank needs a complex matrix")
    M, _ = _integral_rows(A)
    m, n = A.shape
    rank = 0
    prev_inv = GaussianRational(1)
    for col in range(n):
        piv = next((i for i in range(rank, m) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        for i in range(rank + 1, m):
            a = M[i][col]
            if not a:
                continue
            M[i] = [(p * x - a * y) * prev_inv for x, y in zip(M[i], M[rank])]
        prev_inv = p.inverse()
        rank += 1
        if rank == m:
            break
    return rank


def rref(A):
    """Reduced row echelon form over Q(i); returns (R, pivot_columns)."""
    M = [list(r) for r in A.to_field("C").rows]
    m, n = len(M), len(M[0])
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return Matrix._wrap(M, "C"), pivots


def nullspace(A):
    """Basis of {v : A v = 0} over Q(i), as column lists, free variables in index order."""
    R, pivots = rref(A)
    n = A.ncols
    free = [j for j in range(n) if j not in pivots]
    zero, one = GaussianRational(0), GaussianRational(1)
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for row, pc in enumerate(pivots):
            v[pc] = -R.rows[row][f]
        basis.append(v)
    return basis


def inverse_C(A):
    if A.field != "C" or not A.is_square():
        raise DimensionError("inverse_C needs a square complex matrix")
    n = A.nrows
    aug = Matrix._wrap([list(r) + list(e) for r, e in zip(A.rows, Matrix.identity(n).rows)], "C")
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return R.submatrix(range(n), range(n, 2 * n))


def inverse_H(A):
    """Quaternionic inverse through Phi: invert over Q(i), project back."""
    A = A.to_field("H")
    if not A.is_square():
        raise DimensionError("inverse of a non-square matrix")
    return phi_project(inverse_C(phi_embed(A)))


def inverse_H_direct(A):
    """Quaternionic Gauss-Jordan elimination with left row operations.

    Independent of Phi; kept as a cross-check of :func:`inverse_H`.
    """
    A = A.to_field("H")
    n = A.nrows
    M = [list(r) + list(e) for r, e in zip(A.rows, Matrix.identity(n, "H").rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        M[c], M[piv] = M[piv], M[c]
        inv = M[c][c].inverse()
        M[c] = [inv * x for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return Matrix._wrap([r[n:] for r in M], "H")


def inverse(A):
    return inverse_H(A) if A.field == "H" else inverse_C(A)
