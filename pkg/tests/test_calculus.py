import pytest

from parind import (constituents, cuspidality, geometric_lemma_report, is_irreducible_induction,
                    left_adjoint, parabolic, right_adjoint, root_system, sigma_descriptor,
                    socle_cosocle, steinberg_lattice, subrep_lattice, triple,
                    unramified_twist_conditions)
from parind.calculus import canonical
from parind.errors import InvalidM1Triple, InvalidNesting, MixedAmbient, NotSupercuspidal, UpsetGuard
from parind.parabolic import ParabolicSet
from parind.triples import GTriple


@pytest.fixture
def a2():
    return root_system("A2")


def qs(triples):
    return [t.Q.labels() for t in triples]


def test_constituents_examples(a2):
    s = sigma_descriptor(a2, [], ["a1", "a2"])
    assert qs(constituents(s.levi, s)) == [[], ["a1"], ["a2"], ["a1", "a2"]]
    s = sigma_descriptor(a2, [], [])
    assert qs(constituents(s.levi, s)) == [[]]
    s = sigma_descriptor(a2, [], ["a1"])
    assert len(constituents(s.levi, s)) == 2


def test_constituents_require_supercuspidal(a2):
    s = sigma_descriptor(a2, ["a1"], [], supercuspidal=False)
    with pytest.raises(NotSupercuspidal):
        constituents(s.levi, s)


def test_constituents_of_extended_sigma_are_minimized(a2):
    s = sigma_descriptor(a2, ["a1"], ["a1", "a2"], supercuspidal=False, core_supercuspidal=True)
    cons = constituents(s.levi, s)
    assert [(t.P.labels(), t.Q.labels()) for t in cons] == [([], ["a1"]), ([], ["a1", "a2"])]


def test_lattice_borel_a2(a2):
    lat = subrep_lattice(parabolic(a2, []), triple(a2, [], ["a1", "a2"], [], ambient=[]))
    assert lat.index_set == a2.delta
    assert len(lat.constituents) == 4 and len(lat) == 6
    socle, cosocle = socle_cosocle(lat)
    assert socle.marker == frozenset({0, 1}) and socle.triple.Q.labels() == ["a1", "a2"]
    assert cosocle.marker == frozenset() and cosocle.triple.Q.labels() == []
    assert len(lat.join_irreducibles()) == 4
    assert lat.elements[lat.zero] == frozenset()


def test_lattice_irreducible_when_p1_contains_p_sigma(a2):
    P1 = parabolic(a2, ["a1", "a2"])
    lat = subrep_lattice(P1, triple(a2, [], ["a1"], []))
    assert lat.index_set == frozenset() and len(lat) == 2
    socle, cosocle = socle_cosocle(lat)
    assert socle == cosocle


def test_lattice_chain(a2):
    P1 = parabolic(a2, ["a1"])
    lat = subrep_lattice(P1, triple(a2, [], ["a1", "a2"], [], ambient=["a1"]))
    assert lat.index_set == frozenset({1})
    assert len(lat.constituents) == 2 and len(lat) == 3
    socle, cosocle = socle_cosocle(lat)
    assert socle.marker == frozenset({1}) and cosocle.marker == frozenset()
    assert lat.hasse_edges == ((0, 1), (1, 2))


def test_lattice_rejects_wrong_ambient(a2):
    with pytest.raises(InvalidM1Triple):
        subrep_lattice(parabolic(a2, ["a1"]), triple(a2, [], ["a1"], []))


def test_upset_guard_propagates():
    rs = root_system("A1x" * 20 + "A1")
    sigma = sigma_descriptor(rs, [], rs.labels, ambient=[])
    t = GTriple(sigma.levi, sigma, sigma.levi)
    with pytest.raises(UpsetGuard):
        subrep_lattice(ParabolicSet(rs, frozenset(), rs.delta), t)


def test_irreducibility_examples(a2):
    assert is_irreducible_induction(parabolic(a2, ["a1", "a2"]), triple(a2, [], ["a1", "a2"], []))
    assert not is_irreducible_induction(parabolic(a2, []), triple(a2, [], ["a1", "a2"], [], ambient=[]))
    assert is_irreducible_induction(parabolic(a2, ["a1"]), triple(a2, [], ["a1"], [], ambient=["a1"]))


def test_steinberg_lattice(a2):
    full = parabolic(a2, ["a1", "a2"])
    lat = steinberg_lattice(full, parabolic(a2, ["a1"]))
    assert len(lat.constituents) == 1 and len(lat) == 2
    lat = steinberg_lattice(parabolic(a2, []), parabolic(a2, []))
    assert len(lat) == 6 and len(lat.constituents) == 4
    lat = steinberg_lattice(parabolic(a2, ["a1"]), parabolic(a2, []))
    assert [c.triple.Q.labels() for c in lat.constituents] == [[], ["a2"]]
    assert len(lat) == 3
    socle, cosocle = socle_cosocle(lat)
    assert socle.triple.Q.labels() == ["a2"] and cosocle.triple.Q.labels() == []
    with pytest.raises(InvalidNesting):
        steinberg_lattice(parabolic(a2, ["a1"]), parabolic(a2, ["a2"]))


def test_left_adjoint_examples(a2):
    t = triple(a2, [], ["a1"], [])
    res = left_adjoint(parabolic(a2, ["a1", "a2"]), t)
    assert not res.vanishes and res.result_triple == t
    assert left_adjoint(parabolic(a2, ["a2"]), t).vanishes
    res = left_adjoint(parabolic(a2, ["a1"]), t)
    assert not res.vanishes
    assert res.result_triple.name() == "I_M{a1}({}, sigma, {})"
    assert res.result_triple.ambient == frozenset({0})


def test_right_adjoint_examples(a2):
    t = triple(a2, [], ["a1"], [])
    assert right_adjoint(parabolic(a2, ["a1", "a2"]), t).result_triple == t
    for P1 in (["a1"], ["a2"], []):
        res = right_adjoint(parabolic(a2, P1), t)
        assert not res.vanishes and res.result_triple.Q.labels() == []
    assert right_adjoint(parabolic(a2, ["a2"]), triple(a2, [], ["a1"], ["a1"])).vanishes


def test_adjoint_result_invariant(a2):
    t = triple(a2, [], ["a1", "a2"], ["a1"])
    for P1 in ([], ["a1"], ["a2"], ["a1", "a2"]):
        for fn in (left_adjoint, right_adjoint):
            res = fn(parabolic(a2, P1), t)
            assert res.vanishes == (res.result_triple is None)


def test_adjoint_rejects_non_supercuspidal(a2):
    t = triple(a2, ["a1"], [], ["a1"], supercuspidal=False)
    with pytest.raises(NotSupercuspidal):
        left_adjoint(parabolic(a2, []), t)
    with pytest.raises(MixedAmbient):
        left_adjoint(parabolic(a2, [], ambient=["a1"]), triple(a2, [], [], []))


def test_cuspidality_examples(a2):
    c = cuspidality(triple(a2, [], ["a1", "a2"], []))
    assert (c.left_cuspidal, c.right_cuspidal, c.supercuspidal) == (True, False, False)
    c = cuspidality(triple(a2, [], ["a1", "a2"], ["a1", "a2"]))
    assert (c.left_cuspidal, c.right_cuspidal, c.supercuspidal) == (False, True, False)
    rank0 = root_system({"matrix": []})
    c = cuspidality(triple(rank0, [], [], []))
    assert c.left_cuspidal and c.right_cuspidal and c.supercuspidal
    c = cuspidality(triple(a2, ["a1", "a2"], [], None))
    assert c.supercuspidal


def test_canonical_form(a2):
    t = triple(a2, ["a1"], ["a1"], ["a1"], supercuspidal=False, core_supercuspidal=True)
    m = canonical(t)
    assert m.P.labels() == [] and m.Q.labels() == ["a1"] and m.sigma.supercuspidal


def test_twist_examples():
    a2 = root_system("A2")
    rep = unramified_twist_conditions(parabolic(a2, []), triple(a2, [], [], [], ambient=[]), a2.delta)
    assert rep.active_roots == a2.delta
    assert rep.conditions == ("chi(a_a1) != chi_a1(a_a1)", "chi(a_a2) != chi_a2(a_a2)")
    assert not rep.always_irreducible
    assert "union of 2 hypersurface" in rep.locus(a2.labels)
    a11 = root_system("A1xA1")
    rep = unramified_twist_conditions(parabolic(a11, ["a1"]), triple(a11, ["a1"], [], None, ambient=["a1"]),
                                      {1})
    assert rep.candidate_roots == frozenset({1}) and len(rep.conditions) == 1
    rep = unramified_twist_conditions(parabolic(a2, ["a1"]), triple(a2, ["a1"], [], None, ambient=["a1"]),
                                      {1})
    assert rep.candidate_roots == frozenset() and rep.ignored_roots == frozenset({1})
    assert rep.always_irreducible and rep.conditions == ()
    assert "empty" in rep.locus(a2.labels)


def test_geometric_lemma_examples(a2):
    full = parabolic(a2, ["a1", "a2"])
    rep = geometric_lemma_report(full, parabolic(a2, []))
    assert len(rep.cells) == 1 and rep.cells[0].survivor
    b = parabolic(a2, [])
    rep = geometric_lemma_report(b, b)
    assert len(rep.cells) == 6
    assert [c.survivor for c in rep.cells] == [False] * 5 + [True]
    assert str(rep.cells[-1].rep) == "e"
    assert all(c.witness is not None and c.witness_verified for c in rep.cells[:-1])
    rep = geometric_lemma_report(parabolic(a2, ["a1"]), parabolic(a2, ["a2"]))
    assert [str(c.rep) for c in rep.cells] == ["s2*s1", "e"]
    assert rep.survivors == [rep.cells[-1]]
