"""Certificates g with g X g^-1 = -X, det g = 1 and (when strong) g^2 = I.

Each builder rearranges the Jordan blocks of X into a layout where the
reverser is a short block formula, writes it down there, and conjugates it
back to the coordinates of X.  Every result goes through :func:`verify`;
nothing is trusted without the exact check.
"""

import cmath
from fractions import Fraction
from dataclasses import dataclass, field as dc_field

from sympy import integer_nthroot

from .errors import BoundExceeded, DimensionError, NoWitness, RootNotRepresentable, SingularMatrixError
from .matrices import Matrix, antidiag_pair, block_diag, det, det_H
from .partitions import Partition
from .poly import gaussian_roots
from .reality import Reason, is_positive_member
from .scalars import GaussianRational, RationalQuaternion, J
from .spectral import EigenvalueClass, jordan_form, nilpotent_assembly

FLAG_NAMES = ("conjugatesToNegative", "involutive", "special")


@dataclass
class Certificate:
    g: Matrix
    X: Matrix
    flags: dict
    transcript: list = dc_field(default_factory=list)
    claims: tuple = ()

    @property
    def conjugates_to_negative(self):
        return self.flags["conjugatesToNegative"]

    @property
    def involutive(self):
        return self.flags["involutive"]

    @property
    def special(self):
        return self.flags["special"]

    def holds(self, *names):
        return all(self.flags[k] for k in names)


def verify(g, X):
    """Exact check of g X g^-1 = -X (as g X + X g = 0), g^2 = I and det g = 1."""
    if g.shape != X.shape or not g.is_square():
        raise DimensionError(f"g is {g.shape}, X is {X.shape}")
    if g.field != X.field:
        raise DimensionError(f"g is over {g.field}, X is over {X.field}")
    d = det(g)
    if not d:
        raise SingularMatrixError("certificate matrix is singular")
    anti = (g @ X + X @ g).is_zero()
    invol = (g @ g).is_identity()
    special = d == 1
    name = "det_H" if g.field == "H" else "det_C"
    transcript = [
        f"g X + X g = 0: {str(anti).lower()}",
        f"g^2 = I: {str(invol).lower()}",
        f"{name}(g) = {d}",
    ]
    flags = {"conjugatesToNegative": anti, "involutive": invol, "special": special}
    return Certificate(g, X, flags, transcript)


def _certify(g, X, claims, notes=()):
    cert = verify(g, X)
    for c in claims:
        if not cert.flags[c]:
            raise AssertionError(f"built certificate fails {c}: {cert.transcript}")
    cert.claims = tuple(claims)
    cert.transcript = list(notes) + cert.transcript
    return cert


def _identity_certificate(X, claims):
    return _certify(Matrix.identity(X.nrows, X.field), X, claims, ["X = 0: identity"])


# arrangements

class _Arrangement:
    """Canonical Jordan blocks re-laid as ``order`` = [(block index, twisted)].

    A twisted block is conjugated by j, which turns J(d, mu) into J(d, conj mu).
    X_arr = Q J_can Q^-1, and g on X is T^-1 g_arr T with T = Q base_change.
    """

    def __init__(self, jd, order):
        self.jd = jd
        blocks = jd.blocks()
        offsets, off = [], 0
        for _, k in blocks:
            offsets.append(off)
            off += k
        n = off
        field = jd.field
        one = RationalQuaternion(1) if field == "H" else GaussianRational(1)
        zero = one * 0
        rows = []
        self.sizes = []
        for b, twisted in order:
            k = blocks[b][1]
            self.sizes.append(k)
            for i in range(k):
                row = [zero] * n
                row[offsets[b] + i] = J if twisted else one
                rows.append(row)
        if len(rows) != n:
            raise AssertionError("arrangement does not cover every block")
        Q = Matrix._wrap(rows, field)
        self.Q = Q
        self.T = Q @ jd.base_change
        self.Tinv = jd.base_change_inv @ Q.conj_transpose()
        self.X = Q @ jd.canonical() @ Q.conj_transpose()

    def pull_back(self, g_arr):
        return self.Tinv @ g_arr @ self.T


def _block_index(jd):
    out, b = {}, 0
    for s in jd.data:
        out[s.cls] = list(range(b, b + len(s.partition.flat())))
        b += len(s.partition.flat())
    return out


def _pairs(jd, constrained):
    """(positive datum, partner datum) for every constrained class; raises on failure."""
    pairs = []
    for s in jd.data:
        if not constrained(s.cls):
            continue
        partner = jd.datum(s.cls.negated())
        if partner is None or partner.m != s.m:
            raise NoWitness(Reason.PAIRING_FAILURE, f"{s.value} has no partner of equal multiplicity")
        if partner.partition != s.partition:
            raise NoWitness(Reason.PARTITION_MISMATCH,
                            f"partitions at {s.value} and {partner.value} differ")
        if is_positive_member(s.value):
            pairs.append((s, partner))
    return pairs


def _alternating(sizes, field="C"):
    """diag(1, -1, 1, ...) restarted on each block."""
    return Matrix.diag([(-1) ** i for k in sizes for i in range(k)], field)


def _flat_sizes(data):
    return [k for s in data for k in s.partition.flat()]


# complex builders

def _complex_layout(jd):
    if jd.field != "C":
        raise DimensionError("expected Jordan data over C")
    idx = _block_index(jd)
    pairs = _pairs(jd, lambda c: not c.is_zero())
    zero = jd.datum(0)
    order = [(b, False) for b in idx.get(EigenvalueClass(0), [])]
    order += [(b, False) for s, _ in pairs for b in idx[s.cls]]
    order += [(b, False) for _, t in pairs for b in idx[t.cls]]
    p_o = zero.m if zero else 0
    p = sum(s.m for s, _ in pairs)
    pos_sizes = _flat_sizes([s for s, _ in pairs])
    return _Arrangement(jd, order), zero, p_o, p, pos_sizes


def _choose_z(n):
    for z in (GaussianRational(1), GaussianRational(0, 1), GaussianRational(-1), GaussianRational(0, -1)):
        if z ** n * (-1) ** (n // 2) == 1:
            return z
    raise AssertionError("no unit z fixes the determinant")


def build_real_witness_C(X, jd=None):
    """g = tau sigma with sigma = I (+) antidiag(-I, I) and tau = diag(z, -z, ...)."""
    jd = jd or jordan_form(X)
    claims = ("conjugatesToNegative", "special")
    if X.is_zero():
        return _identity_certificate(X, claims)
    arr, _, p_o, p, _ = _complex_layout(jd)
    parts = []
    if p_o:
        parts.append(Matrix.identity(p_o))
    if p:
        parts.append(antidiag_pair(-Matrix.identity(p), Matrix.identity(p)))
    sigma = block_diag(parts)
    n = jd.n
    z = _choose_z(n)
    tau = Matrix.diag([z * (-1) ** k for k in range(n)])
    g = arr.pull_back(tau @ sigma)
    return _certify(g, X, claims, [f"p_o = {p_o}, p = {p}, z = {z}"])


def sign_basis_signs(d):
    """Diagonal of the sign-basis involution of N(d, 0), in matrix coordinates.

    Column offset + k of a block of size d_i holds X^(d_i - 1 - k) v.  The
    vector X^l v gets (-1)^l, or (-1)^(l+1) when d_i = 3 mod 4.
    """
    signs = []
    for size in d.flat():
        shift = 1 if size % 4 == 3 else 0
        signs += [(-1) ** (size - 1 - k + shift) for k in range(size)]
    return signs


def _sign_involution(d, target, reason):
    signs = sign_basis_signs(d)
    prod = 1
    for s in signs:
        prod *= s
    if prod != target:
        odd = next((size for size in d.flat() if size % 2), None)
        if odd is None:
            raise NoWitness(reason, f"no odd part in {d} to fix the determinant")
        off = 0
        for size in d.flat():
            if size == odd:
                break
            off += size
        signs[off:off + odd] = [-s for s in signs[off:off + odd]]
    return Matrix.diag(signs)


def build_strong_witness_nilpotent_C(d):
    """Diagonal involution reversing N(d, 0) with det 1."""
    d = d if isinstance(d, Partition) else Partition.from_parts(d)
    X = nilpotent_assembly(d)
    claims = FLAG_NAMES
    g = _sign_involution(d, 1, Reason.ZERO_PARTITION_OBSTRUCTION)
    return _certify(g, X, claims, [f"sign basis for {d}"])


def build_strong_witness_C(X, jd=None):
    """g = tau sigma with sigma = I (+) antidiag(I, I), tau = tau_o (+) tau_1 (+) tau_1.

    tau_o is the sign-basis involution on the zero block, adjusted to have
    determinant (-1)^p so that det g = 1.
    """
    jd = jd or jordan_form(X)
    if X.is_zero():
        return _identity_certificate(X, FLAG_NAMES)
    arr, zero, p_o, p, pos_sizes = _complex_layout(jd)
    target = (-1) ** p
    parts_sigma, parts_tau = [], []
    if p_o:
        reason = (Reason.ZERO_PARTITION_OBSTRUCTION if zero.partition.in_p_tilde_e()
                  else Reason.MOD_FOUR_OBSTRUCTION)
        parts_sigma.append(Matrix.identity(p_o))
        parts_tau.append(_sign_involution(zero.partition, target, reason))
    elif target != 1:
        raise NoWitness(Reason.MOD_FOUR_OBSTRUCTION, f"n = {jd.n} with no zero eigenvalue")
    if p:
        tau1 = _alternating(pos_sizes)
        parts_sigma.append(antidiag_pair(Matrix.identity(p), Matrix.identity(p)))
        parts_tau += [tau1, tau1]
    sigma, tau = block_diag(parts_sigma), block_diag(parts_tau)
    if sigma @ tau != tau @ sigma:
        raise AssertionError("sigma and tau do not commute")
    g = arr.pull_back(tau @ sigma)
    return _certify(g, X, FLAG_NAMES, [f"p_o = {p_o}, p = {p}", "sigma tau = tau sigma: true"])


# quaternionic builders

def _quaternion_layout(jd, imaginary_classes):
    if jd.field != "H":
        raise DimensionError("expected Jordan data over H")
    idx = _block_index(jd)
    pairs = _pairs(jd, lambda c: not c.is_purely_imaginary())
    order = [(b, False) for c in imaginary_classes for b in idx[c]]
    order += [(b, False) for s, _ in pairs for b in idx[s.cls]]
    # partner blocks carry the representative -conj(lambda); a j twist makes them -lambda
    order += [(b, t.value != -s.value) for s, t in pairs for b in idx[t.cls]]
    p = sum(s.m for s, _ in pairs)
    pos_sizes = _flat_sizes([s for s, _ in pairs])
    return _Arrangement(jd, order), p, pos_sizes


def build_real_witness_H(X, jd=None):
    """g = tau sigma with sigma = (I_q) j (+) antidiag(-I_p, I_p), tau alternating."""
    X = X.to_field("H")
    jd = jd or jordan_form(X)
    claims = ("conjugatesToNegative", "special")
    if X.is_zero():
        return _identity_certificate(X, claims)
    imag = [s.cls for s in jd.data if s.cls.is_purely_imaginary()]
    arr, p, _ = _quaternion_layout(jd, imag)
    q = sum(jd.datum(c).m for c in imag)
    parts = []
    if q:
        parts.append(Matrix.diag([J] * q, "H"))
    if p:
        parts.append(antidiag_pair(-Matrix.identity(p, "H"), Matrix.identity(p, "H")))
    sigma = block_diag(parts)
    tau = _alternating([jd.n], field="H")
    g = arr.pull_back(tau @ sigma)
    return _certify(g, X, claims, [f"q = {q}, p = {p}"])


def _j_pair(size):
    """[[0, j tau_1], [-j tau_1, 0]] as tau sigma with sigma = [[0, j], [-j, 0]]."""
    tau1 = _alternating([size], field="H")
    jI = Matrix.diag([J] * size, "H")
    sigma = antidiag_pair(jI, -jI)
    tau = block_diag([tau1, tau1])
    if sigma @ tau != tau @ sigma:
        raise AssertionError("sigma and tau do not commute")
    return tau @ sigma


def build_strong_witness_H(X, jd=None):
    """g = g_o (+) g_1 (+) g_2 on zero, imaginary and +-lambda sectors."""
    X = X.to_field("H")
    jd = jd or jordan_form(X)
    if X.is_zero():
        return _identity_certificate(X, FLAG_NAMES)
    zero = jd.datum(0)
    imag = [s for s in jd.data if s.cls.is_purely_imaginary() and not s.cls.is_zero()]
    for s in imag:
        if any(t % 2 for _, t in s.partition.parts):
            raise NoWitness(Reason.ODD_IMAGINARY_MULTIPLICITY,
                            f"class {s.value} has partition {s.partition}")
    classes = ([zero.cls] if zero else []) + [s.cls for s in imag]
    arr, p, pos_sizes = _quaternion_layout(jd, classes)
    parts = []
    if zero:
        parts.append(_alternating(zero.partition.flat(), field="H"))
    for s in imag:
        for size, t in s.partition.parts:
            parts += [_j_pair(size)] * (t // 2)
    if p:
        tau1 = _alternating(pos_sizes, field="H")
        sigma = antidiag_pair(Matrix.identity(p, "H"), Matrix.identity(p, "H"))
        tau = block_diag([tau1, tau1])
        if sigma @ tau != tau @ sigma:
            raise AssertionError("sigma and tau do not commute")
        parts.append(tau @ sigma)
    g = arr.pull_back(block_diag(parts))
    return _certify(g, X, FLAG_NAMES, [f"zero = {zero.m if zero else 0}, "
                                       f"imaginary pairs = {sum(s.m for s in imag) // 2}, p = {p}"])


def build_witness(X, strong=False, jd=None):
    jd = jd or jordan_form(X)
    if X.field == "H":
        return build_strong_witness_H(X, jd) if strong else build_real_witness_H(X, jd)
    return build_strong_witness_C(X, jd) if strong else build_real_witness_C(X, jd)


# determinant normalization

def _argument(z):
    a = cmath.phase(complex(float(z.re), float(z.im)))
    return a if a >= 0 else a + 2 * cmath.pi


def scale_to_special(g, field=None):
    """alpha g with det(alpha g) = 1, for a central scalar alpha in the scalar tower."""
    field = field or g.field
    n = g.nrows
    if field == "H":
        D = det_H(g)
        if D <= 0:
            raise SingularMatrixError("certificate matrix is singular")
        num, exact_num = integer_nthroot(D.denominator, 2 * n)
        den, exact_den = integer_nthroot(D.numerator, 2 * n)
        if not (exact_num and exact_den):
            raise RootNotRepresentable(f"det_H = {D} has no rational {2 * n}-th root")
        return g.rscale(Fraction(num, den))
    d = det(g.to_field("C"))
    if not d:
        raise SingularMatrixError("certificate matrix is singular")
    poly = [-d.inverse()] + [GaussianRational(0)] * (n - 1) + [GaussianRational(1)]
    roots, _ = gaussian_roots(poly)
    if not roots:
        raise RootNotRepresentable(f"1/det = {d.inverse()} has no {n}-th root in Q(i)")
    alpha = min(roots, key=_argument)
    return g.to_field("C").rscale(alpha)


# exhaustive monomial search

_UNITS = {
    "C": [GaussianRational(1), GaussianRational(-1)],
    "H": [RationalQuaternion(*c) for c in ((1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
                                          (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1))],
}
SEARCH_BOUND = 8


def negative_search_oracle(X, bound=SEARCH_BOUND):
    """First involutive special reverser among monomial matrices with unit entries.

    Over C the entries are +-1, over H the eight units +-1, +-i, +-j, +-k.
    Returns a Certificate or None.  None only rules out this finite family.
    """
    n = X.nrows
    if n > bound:
        raise BoundExceeded(f"monomial search limited to n <= {bound}")
    field = X.field
    units = _UNITS[field]
    rows = X.rows
    perm = [None] * n
    unit = [None] * n
    assigned = []

    def consistent(new):
        # (gX + Xg)[r][c] = u_r X[pi(r)][c] + X[r][pi(c)] u_pi(c)
        done = set(assigned)
        for r in new:
            for c in done:
                for a, b in ((r, c), (c, r)):
                    if unit[a] * rows[perm[a]][b] + rows[a][perm[b]] * unit[perm[b]]:
                        return False
        return True

    def matrix():
        zero = units[0] * 0
        m = [[zero] * n for _ in range(n)]
        for i in range(n):
            m[i][perm[i]] = unit[i]
        return Matrix._wrap(m, field)

    def search():
        i = next((k for k in range(n) if perm[k] is None), None)
        if i is None:
            g = matrix()
            return g if det(g) == 1 else None
        options = [(i, u, u) for u in units[:2]]
        options += [(j, u, u.inverse()) for j in range(i + 1, n) if perm[j] is None for u in units]
        for j, u, v in options:
            perm[i], unit[i] = j, u
            perm[j], unit[j] = i, v
            new = [i] if i == j else [i, j]
            assigned.extend(new)
            if consistent(new):
                found = search()
                if found is not None:
                    return found
            del assigned[-len(new):]
            perm[i] = unit[i] = perm[j] = unit[j] = None
        return None

    g = search()
    if g is None:
        return None
    return _certify(g, X, FLAG_NAMES, ["monomial search"])
