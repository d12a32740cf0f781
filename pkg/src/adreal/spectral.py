"""Jordan structure over Q(i) and over the rational quaternions.

Quaternionic matrices are handled through their complex image Phi(X).  A
quaternionic column v = v1 + v2 j corresponds to the complex column
psi(v) = (v1, -conj(v2)), which satisfies psi(X v) = Phi(X) psi(v) and
psi(v z) = psi(v) z for complex z.  Right multiplication by j becomes the
antilinear map J(a, b) = (conj(b), -conj(a)); it commutes with Phi(X) and
swaps the lambda and conj(lambda) generalized eigenspaces.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import DimensionError, DoublingViolation, NonSplittingSpectrum
from .matrices import Matrix, block_diag, exact_rank, inverse, nullspace, phi_embed
from .partitions import Partition
from .poly import charpoly, gaussian_roots
from .scalars import GaussianRational, complex_join

_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


@dataclass(frozen=True)
class EigenvalueClass:
    """An eigenvalue (over C) or a similarity class of right eigenvalues (over H).

    Over H the stored representative is the complex member with Im >= 0.
    """

    value: GaussianRational
    field: str = "C"

    def __post_init__(self):
        v = GaussianRational(self.value)
        if self.field == "H" and v.im < 0:
            v = v.conjugate()
        object.__setattr__(self, "value", v)

    def sort_key(self):
        return (self.value.re, self.value.im)

    def is_zero(self):
        return not self.value

    def is_real(self):
        return self.value.im == 0

    def is_purely_imaginary(self):
        return self.value.re == 0

    def negated(self):
        return EigenvalueClass(-self.value, self.field)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class SpectralDatum:
    cls: EigenvalueClass
    partition: Partition

    @property
    def value(self):
        return self.cls.value

    @property
    def m(self):
        return self.partition.n

    def to_json(self):
        return {"lambda": str(self.value), "m": self.m, "partition": self.partition.to_json()}


def _sorted_data(data):
    data = sorted(data, key=lambda s: s.cls.sort_key())
    for a, b in zip(data, data[1:]):
        if a.cls == b.cls:
            raise ValueError(f"eigenvalue class {a.cls} listed twice")
    return tuple(data)


def jordan_block(m, lam, field="C"):
    """J(m, lam): lam on the diagonal, 1 on the superdiagonal."""
    lam = GaussianRational(lam)
    rows = [[lam if i == j else (_ONE if j == i + 1 else _ZERO) for j in range(m)]
            for i in range(m)]
    return Matrix(rows, "C").to_field(field)


def nilpotent_assembly(d, lam=0, field="C"):
    """J(d, lam): one Jordan block per part, largest part first."""
    return block_diag([jordan_block(k, lam, field) for k in d.flat()])


def jordan_assembly(data, field="C"):
    return block_diag([nilpotent_assembly(s.partition, s.value, field) for s in data])


@dataclass(frozen=True)
class JordanData:
    """Jordan data of X together with P^-1 = base_change, P^-1 X P canonical."""

    field: str
    data: tuple
    base_change: Matrix
    base_change_inv: Matrix
    phi_data: tuple = None

    @property
    def n(self):
        return sum(s.m for s in self.data)

    def canonical(self):
        return jordan_assembly(self.data, self.field)

    def blocks(self):
        """(eigenvalue class, block size) in canonical order."""
        return [(s.cls, k) for s in self.data for k in s.partition.flat()]

    def datum(self, value):
        cls = value if isinstance(value, EigenvalueClass) else EigenvalueClass(value, self.field)
        return next((s for s in self.data if s.cls == cls), None)

    def is_nilpotent(self):
        return all(s.cls.is_zero() for s in self.data)

    def is_semisimple(self):
        return all(d == 1 for s in self.data for d, _ in s.partition.parts)

    def trace_is_zero(self):
        if self.field == "H":
            return sum(s.m * s.value.re for s in self.data) == 0
        return sum((s.value * s.m for s in self.data), _ZERO) == 0

    def summary(self):
        return [s.to_json() for s in self.data]

    def same_structure(self, other):
        return self.field == other.field and self.data == other.data


def from_spectral_data(data, field="C"):
    """JordanData of the canonical matrix itself (base change is the identity)."""
    data = _sorted_data(SpectralDatum(EigenvalueClass(s.value, field), s.partition)
                        if isinstance(s, SpectralDatum) else
                        SpectralDatum(EigenvalueClass(s[0], field), s[1]) for s in data)
    n = sum(s.m for s in data)
    ident = Matrix.identity(n, field)
    return JordanData(field, data, ident, ident)


# vector helpers (columns are lists of GaussianRational)

def _matvec(M, v):
    return [sum((a * b for a, b in zip(row, v) if a and b), _ZERO) for row in M.rows]


def _antilinear_j(v):
    n = len(v) // 2
    a, b = v[:n], v[n:]
    return [x.conjugate() for x in b] + [-x.conjugate() for x in a]


class _EchelonSpan:
    """Incrementally maintained span; add() reports whether the vector was new."""

    def __init__(self):
        self.basis = []

    def add(self, v):
        v = list(v)
        for p, b in self.basis:
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, b)]
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = v[p].inverse()
        self.basis.append((p, [x * inv for x in v]))
        return True


def _rank_sequence(N, mult):
    """ranks r_0 = n, r_1, ... of N^k up to stabilization, plus the powers."""
    n = N.nrows
    ranks, powers = [n], [Matrix.identity(n)]
    P = Matrix.identity(n)
    while True:
        P = P @ N
        r = exact_rank(P)
        ranks.append(r)
        powers.append(P)
        if r == ranks[-2]:
            break
    if n - ranks[-1] != mult:
        raise AssertionError(f"generalized eigenspace dimension {n - ranks[-1]} != multiplicity {mult}")
    return ranks, powers


def _chains(N, mult, antilinear=False):
    """Jordan chains of the nilpotent restriction of N, longest first.

    Returns (partition, chains) where each chain is a list of columns
    [N^(L-1) v, ..., N v, v].  With ``antilinear`` set, only one chain of each
    {chain, J chain} pair is returned and the partition is halved.
    """
    ranks, powers = _rank_sequence(N, mult)
    top = len(ranks) - 2
    counts = {}
    for k in range(1, top + 1):
        c = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        if c:
            counts[k] = c
    if antilinear:
        if any(c % 2 for c in counts.values()):
            raise DoublingViolation(f"odd block count at a real class: {counts}")
        counts = {k: c // 2 for k, c in counts.items()}
    tops = []
    for k in range(top, 0, -1):
        need = counts.get(k, 0)
        if not need:
            continue
        span = _EchelonSpan()
        for v in nullspace(powers[k - 1]) if k > 1 else []:
            span.add(v)
        for t, L in tops:
            w = _matvec(powers[L - k], t)
            span.add(w)
            if antilinear:
                span.add(_antilinear_j(w))
        got = 0
        for v in nullspace(powers[k]):
            if span.add(v):
                if antilinear:
                    span.add(_antilinear_j(v))
                tops.append((v, k))
                got += 1
                if got == need:
                    break
        if got != need:
            raise AssertionError(f"found {got} chains of length {k}, expected {need}")
    chains = []
    for t, L in tops:
        chains.append([_matvec(powers[L - 1 - i], t) for i in range(L)])
    return Partition.from_parts([L for _, L in tops]), chains


def _spectrum(M, hint):
    roots, residual = gaussian_roots(charpoly(M), hint or ())
    if len(residual) > 1:
        raise NonSplittingSpectrum(
            f"characteristic polynomial has a factor of degree {len(residual) - 1} with no roots in Q(i)")
    return roots


def _columns_to_matrix(cols, field):
    n = len(cols[0])
    return Matrix._wrap([[c[i] for c in cols] for i in range(n)], field)


def jordan_form_C(X, hint=None):
    """Jordan form of a complex matrix with spectrum in Q(i)."""
    X = X.to_field("C") if X.field == "C" else _require_complex(X)
    if not X.is_square():
        raise DimensionError("Jordan form needs a square matrix")
    n = X.nrows
    roots = _spectrum(X, hint)
    data, cols = [], []
    for lam in sorted(roots, key=lambda z: (z.re, z.im)):
        part, chains = _chains(X - Matrix.identity(n).rscale(lam), roots[lam])
        data.append(SpectralDatum(EigenvalueClass(lam, "C"), part))
        cols.extend(v for chain in chains for v in chain)
    P = _columns_to_matrix(cols, "C")
    Pinv = inverse(P)
    jd = JordanData("C", tuple(data), Pinv, P)
    if Pinv @ X @ P != jd.canonical():
        raise AssertionError("Jordan reconstruction failed")
    return jd


def _require_complex(X):
    if any(not x.is_complex() for x in X.entries()):
        raise DimensionError("matrix has non-complex quaternion entries")
    return X.to_field("C")


def _psi_inverse(v):
    n = len(v) // 2
    return [complex_join(a, -b.conjugate()) for a, b in zip(v[:n], v[n:])]


def jordan_form_H(X, hint=None):
    """Jordan form of a quaternionic matrix, computed on Phi(X)."""
    X = X.to_field("H")
    if not X.is_square():
        raise DimensionError("Jordan form needs a square matrix")
    n = X.nrows
    M = phi_embed(X)
    hint = list(hint or ())
    hint = hint + [GaussianRational(h).conjugate() for h in hint]
    roots = _spectrum(M, list(dict.fromkeys(GaussianRational(h) for h in hint)))
    phi_data = []
    for lam in sorted(roots, key=lambda z: (z.re, z.im)):
        mult = roots[lam]
        if roots.get(lam.conjugate()) != mult:
            raise DoublingViolation(f"{lam} and its conjugate have different multiplicities")
        phi_data.append((lam, mult))
    data, cols, phi_parts = [], [], []
    ident = Matrix.identity(2 * n)
    for lam, mult in phi_data:
        N = M - ident.rscale(lam)
        if lam.im < 0:
            part, _ = _chains(N, mult)
            phi_parts.append(SpectralDatum(EigenvalueClass(lam, "C"), part))
            continue
        if lam.im > 0:
            part, chains = _chains(N, mult)
            phi_parts.append(SpectralDatum(EigenvalueClass(lam, "C"), part))
            qpart = part
        else:
            qpart, chains = _chains(N, mult, antilinear=True)
            phi_parts.append(SpectralDatum(EigenvalueClass(lam, "C"),
                                           Partition(tuple((d, 2 * t) for d, t in qpart.parts))))
        data.append(SpectralDatum(EigenvalueClass(lam, "H"), qpart))
        cols.extend(_psi_inverse(v) for chain in chains for v in chain)
    by_value = {s.value: s.partition for s in phi_parts}
    for s in phi_parts:
        if by_value[s.value.conjugate()] != s.partition:
            raise DoublingViolation(f"partitions at {s.value} and its conjugate differ")
    P = _columns_to_matrix(cols, "H")
    Pinv = inverse(P)
    jd = JordanData("H", tuple(data), Pinv, P, tuple(phi_parts))
    if Pinv @ X @ P != jd.canonical():
        raise AssertionError("quaternionic Jordan reconstruction failed")
    return jd


def jordan_form(X, hint=None):
    return jordan_form_H(X, hint) if X.field == "H" else jordan_form_C(X, hint)


class OrderedJordanBasis(NamedTuple):
    """Reordering of the standard Jordan basis of N(d, 0).

    ``order[k]`` is the standard index of the k-th ordered vector, ``labels[k]``
    is (j, block, power) meaning X^power v_block sits in group B(j), and
    ``groups`` lists the sizes of the consecutive same-part runs.
    """

    partition: Partition
    order: list
    labels: list
    groups: list


def ordered_basis(d):
    sizes = d.flat()
    offsets = [sum(sizes[:b]) for b in range(len(sizes))]
    order, labels, groups = [], [], []
    for j in range(1, sizes[0] + 1):
        for part, t in d.parts:
            if part < j:
                continue
            power = part - j
            run = 0
            for b, size in enumerate(sizes):
                if size == part:
                    order.append(offsets[b] + size - 1 - power)
                    labels.append((j, b, power))
                    run += 1
            groups.append(run)
    return OrderedJordanBasis(d, order, labels, groups)


def permutation_matrix(order, field="C"):
    """Q with (Q v)[k] = v[order[k]]."""
    n = len(order)
    rows = [[_ONE if c == order[r] else _ZERO for c in range(n)] for r in range(n)]
    return Matrix._wrap(rows, "C").to_field(field)

