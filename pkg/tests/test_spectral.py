import pytest

from adreal.errors import DefectiveHint, DoublingViolation, NonSplittingSpectrum
from adreal.matrices import Matrix, block_diag, inverse, nullspace, phi_embed
from adreal.partitions import Partition, enumerate_partitions
from adreal.scalars import GaussianRational as G
from adreal.spectral import (
    _chains,
    from_spectral_data,
    jordan_block,
    jordan_form,
    jordan_form_C,
    jordan_form_H,
    nilpotent_assembly,
    ordered_basis,
    permutation_matrix,
)

from lattice import conjugated, lattice_C, lattice_H, spec_id


def P(*pairs):
    return Partition(pairs)


def data_of(jd):
    return [(str(s.value), str(s.partition)) for s in jd.data]


def test_blocks():
    assert jordan_block(2, 0) == Matrix([[0, 1], [0, 0]])
    assert jordan_block(1, 5) == Matrix([[5]])
    N = nilpotent_assembly(P((4, 1), (2, 2)))
    assert N == block_diag([jordan_block(4, 0), jordan_block(2, 0), jordan_block(2, 0)])


def test_jordan_C_examples():
    assert data_of(jordan_form_C(Matrix.diag([1, -1]))) == [("-1", "[1]"), ("1", "[1]")]
    assert data_of(jordan_form_C(nilpotent_assembly(P((4, 1), (2, 2))))) == [("0", "[4,2^2]")]
    rot = Matrix([[0, 1], [-1, 0]])
    assert data_of(jordan_form_C(rot, [G(0, 1), G(0, -1)])) == [("-i", "[1]"), ("i", "[1]")]


def test_jordan_H_examples():
    jd = jordan_form_H(Matrix([["i"]], "H"))
    assert data_of(jd) == [("i", "[1]")]
    jd = jordan_form_H(Matrix([["i", 1], [0, "i"]], "H"))
    assert data_of(jd) == [("i", "[2]")]
    assert [str(s.partition) for s in jd.phi_data] == ["[2]", "[2]"]
    jd = jordan_form_H(Matrix([[1]], "H"))
    assert data_of(jd) == [("1", "[1]")]
    assert [str(s.partition) for s in jd.phi_data] == ["[1^2]"]


def test_quaternion_class_representative():
    # -i and i are similar over H, so the class is reported once as i
    X = Matrix.diag(["-i", "i"], "H")
    assert data_of(jordan_form_H(X)) == [("i", "[1^2]")]
    X = Matrix.diag(["1-i", "-1-i"], "H")
    assert data_of(jordan_form_H(X)) == [("-1+i", "[1]"), ("1+i", "[1]")]


def test_refusals():
    with pytest.raises(NonSplittingSpectrum):
        jordan_form_C(Matrix([[0, 1], [2, 0]]))
    with pytest.raises(DefectiveHint):
        jordan_form_C(Matrix.diag([1, -1]), [G(3)])
    with pytest.raises(NonSplittingSpectrum):
        jordan_form_H(Matrix([[0, 1], [2, 0]], "H"))


def test_doubling_guard():
    # a single complex Jordan block cannot come from a real quaternionic class
    with pytest.raises(DoublingViolation):
        _chains(jordan_block(2, 0), 2, antilinear=True)


def test_reconstruction_and_rank_identity():
    for k, spec in enumerate(lattice_C(4)):
        X, ref = conjugated(spec, "C", k)
        jd = jordan_form(X)
        assert jd.data == ref.data, spec_id(spec)
        assert jd.base_change @ X @ jd.base_change_inv == jd.canonical()
        assert (jd.base_change @ jd.base_change_inv).is_identity()
        assert sum(s.m for s in jd.data) == X.nrows


def test_phi_pairs_conjugates():
    for k, spec in enumerate(lattice_H(3)):
        X, ref = conjugated(spec, "H", k)
        jd = jordan_form_H(X)
        assert jd.data == ref.data, spec_id(spec)
        phi = {s.value: s.partition for s in jd.phi_data}
        for lam, part in phi.items():
            assert phi[lam.conjugate()] == part
        # cross-check against the complex Jordan form of Phi(X)
        jc = jordan_form_C(phi_embed(X))
        assert {s.value: s.partition for s in jc.data} == phi


def test_ordered_basis_examples():
    ob = ordered_basis(P((4, 1), (2, 2)))
    # standard index of X^l v for block b: offset_b + size_b - 1 - l
    expected = [(0, 3), (1, 1), (2, 1), (0, 2), (1, 0), (2, 0), (0, 1), (0, 0)]
    assert [(b, l) for _, b, l in ob.labels] == expected
    assert ob.order == [0, 4, 6, 1, 5, 7, 2, 3]
    assert ordered_basis(P((1, 1))).order == [0]
    ob = ordered_basis(P((2, 1), (1, 1)))
    assert [(j, b, l) for j, b, l in ob.labels] == [(1, 0, 1), (1, 1, 0), (2, 0, 0)]


def reverser_space(X):
    """Basis of {g : g X + X g = 0} as n x n matrices."""
    n = X.nrows
    rows = []
    for r in range(n):
        for c in range(n):
            row = [G(0)] * (n * n)
            for k in range(n):
                row[r * n + k] += X[k, c]
                row[k * n + c] += X[r, k]
            rows.append(row)
    return [Matrix([v[i * n:(i + 1) * n] for i in range(n)]) for v in nullspace(Matrix(rows))]


@pytest.mark.parametrize("parts", [((4, 1), (2, 2)), ((3, 1), (1, 1)), ((2, 1), (1, 2)), ((3, 1), (2, 1), (1, 1))])
def test_reverser_block_triangular(parts):
    d = Partition(parts)
    X = nilpotent_assembly(d)
    ob = ordered_basis(d)
    Q = permutation_matrix(ob.order)
    starts, s = [], 0
    for size in ob.groups:
        starts.append(s)
        s += size
    group_of = [i for i, size in enumerate(ob.groups) for _ in range(size)]
    space = reverser_space(X)
    assert space
    for g in space:
        h = Q @ g @ inverse(Q)
        for r in range(X.nrows):
            for c in range(X.nrows):
                if group_of[r] > group_of[c]:
                    assert not h[r, c], (parts, r, c)


def test_spectral_data_roundtrip():
    jd = from_spectral_data([(G(1), P((2, 1))), (G(-1), P((1, 2)))])
    assert jd.canonical() == block_diag([Matrix.diag([-1, -1]), jordan_block(2, 1)])
    with pytest.raises(ValueError):
        from_spectral_data([(G(1), P((1, 1))), (G(1), P((2, 1)))])


def test_every_nilpotent_orbit_small():
    for n in range(1, 6):
        for d in enumerate_partitions(n):
            jd = jordan_form_C(nilpotent_assembly(d))
            assert data_of(jd) == [("0", str(d))]
            jh = jordan_form_H(nilpotent_assembly(d, 0, "H"))
            assert data_of(jh) == [("0", str(d))]
