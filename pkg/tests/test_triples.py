import pytest

from parind import (check_e_minimal_orthogonality, minimize, minimize_triple, p_sigma, root_system,
                    sigma_descriptor, triple, validate_triple)
from parind.errors import InconsistentDescriptor, NotEMinimal, QOutOfRange
from parind.parabolic import ParabolicSet, all_subsets
from parind.triples import GTriple, is_e_minimal, require_consistent, valid_qs
from parind.verify import core_descriptors, supercuspidal_descriptors


def test_p_sigma_examples():
    a2 = root_system("A2")
    assert p_sigma(sigma_descriptor(a2, [], ["a1", "a2"])).labels() == ["a1", "a2"]
    assert p_sigma(sigma_descriptor(a2, [], ["a1"])).labels() == ["a1"]
    a11 = root_system("A1xA1")
    assert p_sigma(sigma_descriptor(a11, ["a1"], ["a2"])).labels() == ["a1", "a2"]


def test_minimize_examples():
    a11 = root_system("A1xA1")
    s = sigma_descriptor(a11, ["a1"], ["a2"])
    assert minimize(s) == (s.levi, s)
    pmin, smin = minimize(sigma_descriptor(a11, ["a1"], ["a1", "a2"], supercuspidal=False,
                                           core_supercuspidal=True))
    assert pmin.members == frozenset()
    a2 = root_system("A2")
    pmin, smin = minimize(sigma_descriptor(a2, ["a1"], ["a1"], supercuspidal=False,
                                           core_supercuspidal=True))
    assert pmin.members == frozenset()
    assert smin.delta_sigma == frozenset({0})
    assert smin.supercuspidal


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3", "A1xA2"])
def test_minimize_invariants(name):
    rs = root_system(name)
    for s in core_descriptors(rs):
        pmin, smin = minimize(s)
        assert p_sigma(smin) == p_sigma(s)
        assert minimize(smin) == (pmin, smin)
        assert is_e_minimal(smin)
        assert check_e_minimal_orthogonality(smin)
    for s in supercuspidal_descriptors(rs):
        assert minimize(s) == (s.levi, s)


def test_orthogonality_gate():
    assert check_e_minimal_orthogonality(sigma_descriptor(root_system("A2"), [], ["a1", "a2"]))
    assert check_e_minimal_orthogonality(sigma_descriptor(root_system("A1xA1"), ["a1"], ["a2"]))
    a2 = root_system("A2")
    loose = sigma_descriptor(a2, ["a1"], ["a2"], supercuspidal=False)
    assert not check_e_minimal_orthogonality(loose)
    with pytest.raises(InconsistentDescriptor):
        require_consistent(loose)
    with pytest.raises(InconsistentDescriptor):
        sigma_descriptor(a2, ["a1"], ["a2"])
    with pytest.raises(NotEMinimal):
        check_e_minimal_orthogonality(sigma_descriptor(a2, ["a1"], ["a1"], supercuspidal=False))


def test_descriptor_flags():
    a2 = root_system("A2")
    with pytest.raises(InconsistentDescriptor):
        sigma_descriptor(a2, ["a1"], ["a1"])          # supercuspidal but trivial inside its Levi
    with pytest.raises(InconsistentDescriptor):
        sigma_descriptor(a2, [], [], irreducible_admissible=False)
    with pytest.raises(InconsistentDescriptor):
        sigma_descriptor(a2, [], [], supercuspidal=True, core_supercuspidal=False)


def test_validate_triple_examples():
    a2 = root_system("A2")
    assert triple(a2, [], ["a1"], []).Q.labels() == []
    assert triple(a2, [], ["a1"], ["a1"]).Q.labels() == ["a1"]
    with pytest.raises(QOutOfRange) as err:
        triple(a2, [], ["a1"], ["a2"])
    assert err.value.root == "a2"
    s = sigma_descriptor(a2, ["a1"], [], supercuspidal=True)
    with pytest.raises(QOutOfRange) as err:
        validate_triple(GTriple(s.levi, s, ParabolicSet(a2, frozenset(), a2.delta)))
    assert err.value.root == "a1"


def test_minimize_triple_examples():
    a11 = root_system("A1xA1")
    t = triple(a11, ["a1"], ["a1", "a2"], ["a1"], supercuspidal=False, core_supercuspidal=True)
    m = minimize_triple(t)
    assert m.P.members == frozenset() and m.Q.labels() == ["a1"]
    assert validate_triple(m) is m
    assert minimize_triple(m) == m
    a2 = root_system("A2")
    b = triple(a2, [], ["a1", "a2"], ["a1"])
    assert minimize_triple(b) == b


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1", "A1xA2"])
def test_number_of_valid_q(name):
    rs = root_system(name)
    for s in supercuspidal_descriptors(rs):
        accepted = []
        for Q in all_subsets(rs.delta):
            try:
                validate_triple(GTriple(s.levi, s, ParabolicSet(rs, Q, rs.delta)))
                accepted.append(Q)
            except QOutOfRange:
                pass
        assert len(accepted) == 2 ** len(s.delta_sigma)
        assert [q.members for q in valid_qs(s)] == accepted


def test_names_and_labels():
    a2 = root_system("A2")
    assert str(triple(a2, [], ["a1", "a2"], [])) == "I_G({}, sigma, {}) [e(sigma)xSt]"
    assert str(triple(a2, [], ["a1", "a2"], ["a1", "a2"])) == "I_G({}, sigma, {a1,a2}) [e(sigma)]"
    assert str(triple(a2, ["a1", "a2"], [], None)) == "I_G({a1,a2}, sigma, {a1,a2}) [sigma]"
    assert triple(a2, [], [], [], ambient=["a1"]).name() == "I_M{a1}({}, sigma, {})"
