"""Decision procedures for Ad-reality and strong Ad-reality over C and H.

All verdicts are read off Jordan data.  Reason codes say which condition
decided the verdict; they are part of the report format.
"""

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import DimensionError, NotInSl, ShapePreconditionError
from .matrices import Matrix, antidiag_pair, block_diag, det_C, inverse
from .spectral import jordan_form


class Reason(str, Enum):
    PAIRING_FAILURE = "PairingFailure"
    PARTITION_MISMATCH = "PartitionMismatch"
    ZERO_PARTITION_OBSTRUCTION = "ZeroPartitionObstruction"
    MOD_FOUR_OBSTRUCTION = "ModFourObstruction"
    ODD_IMAGINARY_MULTIPLICITY = "OddImaginaryMultiplicity"
    ALL_CONDITIONS_MET = "AllConditionsMet"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ClassificationReport:
    field: str
    n: int
    real: bool
    strongly_real: bool
    reason: Reason
    spectrum: list

    def to_json(self):
        return {
            "field": self.field,
            "n": self.n,
            "real": self.real,
            "stronglyReal": self.strongly_real,
            "reason": str(self.reason),
            "spectrum": self.spectrum,
        }


def is_positive_member(value):
    """Chooses one member of each {lambda, -lambda} pair: Re > 0, or Re = 0 and Im > 0."""
    return value.re > 0 or (value.re == 0 and value.im > 0)


def _check_field(jd, field):
    if jd.field != field:
        raise DimensionError(f"expected Jordan data over {field}, got {jd.field}")


def _check_trace(jd):
    if not jd.trace_is_zero():
        raise NotInSl("matrix has nonzero trace")


def _pairing(jd, constrained):
    for s in jd.data:
        if not constrained(s.cls):
            continue
        partner = jd.datum(s.cls.negated())
        if partner is None or partner.m != s.m:
            return False, Reason.PAIRING_FAILURE
        if partner.partition != s.partition:
            return False, Reason.PARTITION_MISMATCH
    return True, Reason.ALL_CONDITIONS_MET


def is_real_C(jd, gl_mode=False):
    _check_field(jd, "C")
    if not gl_mode:
        _check_trace(jd)
    return _pairing(jd, lambda c: not c.is_zero())


def is_real_H(jd, gl_mode=False):
    _check_field(jd, "H")
    if not gl_mode:
        _check_trace(jd)
    return _pairing(jd, lambda c: not c.is_purely_imaginary())


def is_strongly_real_C(jd, gl_mode=False):
    """Strong reality over C.

    For a real X with zero-eigenvalue multiplicity p_o the answer is yes iff
    n is not 2 mod 4, or the zero partition has an odd part.  When it fails,
    a zero partition in P~e is reported as ZeroPartitionObstruction and
    everything else as ModFourObstruction.
    """
    real, reason = is_real_C(jd, gl_mode)
    if not real:
        return False, reason
    zero = jd.datum(0)
    if jd.n % 4 != 2 or (zero is not None and zero.partition.has_odd_part()):
        return True, Reason.ALL_CONDITIONS_MET
    if zero is not None and zero.partition.in_p_tilde_e():
        return False, Reason.ZERO_PARTITION_OBSTRUCTION
    return False, Reason.MOD_FOUR_OBSTRUCTION


def is_strongly_real_H(jd, gl_mode=False):
    real, reason = is_real_H(jd, gl_mode)
    if not real:
        return False, reason
    for s in jd.data:
        if s.cls.is_purely_imaginary() and not s.cls.is_zero():
            if any(t % 2 for _, t in s.partition.parts):
                return False, Reason.ODD_IMAGINARY_MULTIPLICITY
    return True, Reason.ALL_CONDITIONS_MET


def classify(jd, gl_mode=False):
    if jd.field == "H":
        real, reason = is_real_H(jd, gl_mode)
        strong, sreason = is_strongly_real_H(jd, gl_mode)
    else:
        real, reason = is_real_C(jd, gl_mode)
        strong, sreason = is_strongly_real_C(jd, gl_mode)
    return ClassificationReport(jd.field, jd.n, real, strong, sreason if real else reason,
                                jd.summary())


def classify_matrix(X, hint=None, gl_mode=False):
    return classify(jordan_form(X, hint), gl_mode)


class SemisimpleNilpotentSplit(NamedTuple):
    X_s: Matrix
    X_n: Matrix


def split_semisimple_nilpotent(X, jd=None):
    jd = jd or jordan_form(X)
    D = Matrix.diag([cls.value for cls, k in jd.blocks() for _ in range(k)], "C").to_field(jd.field)
    X_s = jd.base_change_inv @ D @ jd.base_change
    X_n = X.to_field(jd.field) - X_s
    return SemisimpleNilpotentSplit(X_s, X_n)


def centralizer_block_structure(jd):
    """Eigenvalue multiplicities (p_1, ..., p_r) of semisimple data, canonical order.

    A matrix commutes with the canonical semisimple form iff it is block
    diagonal with these block sizes.
    """
    if not jd.is_semisimple():
        raise ShapePreconditionError("centralizer structure needs semisimple data")
    return tuple(s.m for s in jd.data)


class SemisimpleArrangement(NamedTuple):
    """Zero block, then lambda_1 I, ..., lambda_r I, then -lambda_1 I, ..., -lambda_r I."""

    p_o: int
    pairs: list  # (lambda, p) with lambda the positive member

    @property
    def n(self):
        return self.p_o + 2 * sum(p for _, p in self.pairs)

    def diagonal(self):
        vals = [0] * self.p_o
        vals += [lam for lam, p in self.pairs for _ in range(p)]
        vals += [-lam for lam, p in self.pairs for _ in range(p)]
        return vals

    def matrix(self):
        return Matrix.diag(self.diagonal(), "C")


def semisimple_arrangement(jd):
    _check_field(jd, "C")
    if not jd.is_semisimple():
        raise ShapePreconditionError("arrangement needs semisimple data")
    zero = jd.datum(0)
    pairs = []
    for s in jd.data:
        if s.cls.is_zero() or not is_positive_member(s.value):
            continue
        partner = jd.datum(-s.value)
        if partner is None or partner.m != s.m:
            raise ShapePreconditionError(f"{s.value} has no matching {-s.value}")
        pairs.append((s.value, s.m))
    arr = SemisimpleArrangement(zero.m if zero else 0, pairs)
    if arr.n != jd.n:
        raise ShapePreconditionError("spectrum is not paired under negation")
    return arr


def reverser_shape_check(sigma, jd):
    """Does sigma have the shape alpha (+) antidiag(f_1 (+) ... ; g_1 (+) ...)?

    The shape is taken with respect to :func:`semisimple_arrangement`;
    f_i and g_i must be invertible p_i x p_i blocks and alpha invertible.
    """
    arr = semisimple_arrangement(jd)
    if sigma.field != "C" or sigma.shape != (arr.n, arr.n):
        raise ShapePreconditionError("sigma must be a complex matrix of the arrangement size")
    if not det_C(sigma):
        raise ShapePreconditionError("sigma must be invertible")
    vals = arr.diagonal()
    n = arr.n
    for r in range(n):
        for c in range(n):
            if sigma[r, c] and vals[r] != -vals[c]:
                return False
    blocks = [range(arr.p_o)] if arr.p_o else []
    off = arr.p_o
    half = sum(p for _, p in arr.pairs)
    for _, p in arr.pairs:
        rows, cols = range(off, off + p), range(off + half, off + half + p)
        blocks += [(rows, cols), (cols, rows)]
        off += p
    for b in blocks:
        rows, cols = b if isinstance(b, tuple) else (b, b)
        if not det_C(sigma.submatrix(rows, cols)):
            return False
    return True


def reverser_of_shape(f_blocks, g_blocks, alpha=None):
    """alpha (+) antidiag(f_1 (+) ... ; g_1 (+) ...), a convenience for tests and builders."""
    F, G = block_diag(f_blocks), block_diag(g_blocks)
    pair = antidiag_pair(F, G)
    return block_diag([alpha, pair]) if alpha is not None else pair


def conjugates_to_negative(sigma, A):
    return sigma @ A @ inverse(sigma) == -A

