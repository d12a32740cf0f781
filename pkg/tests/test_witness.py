import pytest

from adreal.errors import BoundExceeded, NoWitness, RootNotRepresentable, SingularMatrixError
from adreal.matrices import Matrix, block_diag, det_C, det_H, split_matrix
from adreal.partitions import Partition, enumerate_partitions
from adreal.reality import Reason, classify
from adreal.scalars import GaussianRational as G
from adreal.spectral import from_spectral_data, jordan_block, nilpotent_assembly
from adreal.witness import (
    build_real_witness_C,
    build_real_witness_H,
    build_strong_witness_C,
    build_strong_witness_H,
    build_strong_witness_nilpotent_C,
    build_witness,
    negative_search_oracle,
    scale_to_special,
    sign_basis_signs,
    verify,
)

from lattice import conjugated, lattice_C, spec_id


def P(*pairs):
    return Partition(pairs)


IMAG_BLOCK = Matrix([["i", 1], [0, "i"]], "H")


def test_verify_examples():
    c = verify(Matrix.diag([1, -1]), jordan_block(2, 0))
    assert c.conjugates_to_negative and c.involutive and not c.special
    c = verify(Matrix.identity(2), jordan_block(2, 0))
    assert not c.conjugates_to_negative and c.involutive and c.special
    c = verify(Matrix([[0, "j"], ["-j", 0]], "H"), Matrix.diag(["i", "i"], "H"))
    assert c.holds("conjugatesToNegative", "involutive", "special")
    assert c.transcript[-1] == "det_H(g) = 1"


def test_verify_rejects():
    with pytest.raises(SingularMatrixError):
        verify(Matrix([[1, 1], [1, 1]]), jordan_block(2, 0))
    with pytest.raises(Exception):
        verify(Matrix.identity(3), jordan_block(2, 0))


def test_nilpotent_sign_basis():
    assert build_strong_witness_nilpotent_C([3]).g == Matrix.diag([-1, 1, -1])
    assert build_strong_witness_nilpotent_C([2, 1]).g == Matrix.diag([-1, 1, -1])
    with pytest.raises(NoWitness) as e:
        build_strong_witness_nilpotent_C([2])
    assert e.value.reason == Reason.ZERO_PARTITION_OBSTRUCTION


def test_sign_basis_determinant_law():
    # det of the raw sign basis is (-1)^(number of parts of size 2 mod 4)
    for n in range(1, 13):
        for d in enumerate_partitions(n):
            signs = sign_basis_signs(d)
            X = nilpotent_assembly(d)
            g = Matrix.diag(signs)
            assert verify(g, X).holds("conjugatesToNegative", "involutive")
            e2 = sum(t for size, t in d.parts if size % 4 == 2)
            assert det_C(g) == (-1) ** e2
            if d.in_p_tilde_e():
                with pytest.raises(NoWitness):
                    build_strong_witness_nilpotent_C(d)
            else:
                assert build_strong_witness_nilpotent_C(d).holds("special")


def test_builders_C_examples():
    c = build_real_witness_C(Matrix.diag([1, -1]))
    assert c.holds("conjugatesToNegative", "special") and not c.involutive
    with pytest.raises(NoWitness) as e:
        build_strong_witness_C(Matrix.diag([1, -1]))
    assert e.value.reason == Reason.MOD_FOUR_OBSTRUCTION
    X = block_diag([nilpotent_assembly(P((3, 1), (1, 1))), Matrix.diag([1, -1])])
    assert build_strong_witness_C(X).holds("involutive", "special")
    X = block_diag([nilpotent_assembly(P((2, 2))), Matrix.diag([1, -1])])
    with pytest.raises(NoWitness) as e:
        build_strong_witness_C(X)
    assert e.value.reason == Reason.MOD_FOUR_OBSTRUCTION
    c = build_witness(Matrix.zeros(3), strong=True)
    assert c.g.is_identity()


def test_builders_H_examples():
    c = build_real_witness_H(IMAG_BLOCK)
    assert c.holds("conjugatesToNegative", "special")
    with pytest.raises(NoWitness) as e:
        build_strong_witness_H(IMAG_BLOCK)
    assert e.value.reason == Reason.ODD_IMAGINARY_MULTIPLICITY
    X = block_diag([IMAG_BLOCK, IMAG_BLOCK])
    assert build_strong_witness_H(X).holds("involutive", "special")
    assert build_strong_witness_H(jordan_block(2, 0, "H")).holds("involutive", "special")
    X = Matrix.diag(["1+i", "-1+i"], "H")
    assert build_strong_witness_H(X).holds("involutive", "special")
    X = Matrix.diag(["1+i", "-1-i", "2i", "2i"], "H")
    assert build_strong_witness_H(X).holds("involutive", "special")


def test_builder_agrees_with_classifier_C():
    for k, spec in enumerate(lattice_C(4)):
        ref = from_spectral_data(spec)
        if not ref.trace_is_zero():
            continue
        X, _ = conjugated(spec, "C", k)
        r = classify(ref)
        for strong, expected in ((False, r.real), (True, r.strongly_real)):
            try:
                build_witness(X, strong)
                ok = True
            except NoWitness:
                ok = False
            assert ok == expected, (spec_id(spec), strong)


def test_quaternionic_reverser_components():
    # g = A + B j reverses a complex X iff A X = -X A and B conj(X) = -X B
    for d in enumerate_partitions(4):
        X = nilpotent_assembly(d, 0, "H")
        A, B = split_matrix(build_strong_witness_H(X).g)
        Xc = nilpotent_assembly(d)
        assert A @ Xc == -(Xc @ A)
        assert B @ Xc.conj() == -(Xc @ B)
    A, B = split_matrix(build_real_witness_H(IMAG_BLOCK).g)
    Xc = jordan_block(2, "i")
    assert A @ Xc == -(Xc @ A) and B @ Xc.conj() == -(Xc @ B)
    assert not B.is_zero()


def test_scale_to_special():
    assert scale_to_special(Matrix.diag([2, 2])).is_identity()
    g = scale_to_special(Matrix.diag([2, 1, 4]))
    assert g == Matrix.diag([1, G(1, 0) / 2, 2])
    g = scale_to_special(Matrix.diag(["i", "i"]))
    assert det_C(g) == 1 and g == Matrix.diag([-1, -1])
    g = scale_to_special(Matrix.diag([2, 2], "H"))
    assert det_H(g) == 1
    with pytest.raises(RootNotRepresentable):
        scale_to_special(Matrix.diag([1, 2]))
    with pytest.raises(RootNotRepresentable):
        scale_to_special(Matrix.diag([1, 2], "H"))


def test_scaling_keeps_reversal():
    g = build_real_witness_C(Matrix.diag([1, -1])).g.rscale(3)
    s = scale_to_special(g)
    assert verify(s, Matrix.diag([1, -1])).holds("conjugatesToNegative", "special")


def test_oracle():
    assert negative_search_oracle(Matrix.diag([1, -1])) is None
    found = negative_search_oracle(Matrix.diag([1, -1], "H"))
    assert found is not None and found.holds("involutive", "special")
    assert negative_search_oracle(nilpotent_assembly(P((2, 1)))) is None
    assert negative_search_oracle(nilpotent_assembly(P((3, 1)))) is not None
    assert negative_search_oracle(IMAG_BLOCK) is None
    with pytest.raises(BoundExceeded):
        negative_search_oracle(Matrix.zeros(9))


def test_oracle_agrees_on_nilpotent_C():
    # the sign basis is monomial, so the oracle must find something exactly
    # when the partition lies outside P~e
    for n in range(1, 7):
        for d in enumerate_partitions(n):
            found = negative_search_oracle(nilpotent_assembly(d))
            assert (found is not None) == (not d.in_p_tilde_e()), str(d)
