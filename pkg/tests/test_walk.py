from fractions import Fraction

import pytest

from kerov import walk
from kerov.errors import DisconnectedGraphError, DomainError
from kerov.report import HYPOTHESIS_VIOLATED, PASS


def test_s3_permutation_chain():
    chain = walk.chain_from_character(3, "perm")
    assert chain.states == ((3,), (2, 1), (1, 1, 1))
    F = Fraction
    assert chain.matrix == (
        (F(1, 3), F(2, 3), F(0)),
        (F(1, 6), F(2, 3), F(1, 6)),  # std x perm = triv + 2 std + sign
        (F(0), F(2, 3), F(1, 3)),
    )
    assert set(chain.eigenvalues().values()) == {F(0), F(1, 3), F(1)}
    assert chain.stationary() == {(3,): F(1, 6), (2, 1): F(2, 3), (1, 1, 1): F(1, 6)}


@pytest.mark.parametrize("eta", ["perm", "std"])
@pytest.mark.parametrize("n", range(2, 7))
def test_builtin_suites_pass(n, eta):
    reports = walk.walk_suite(n, eta)
    assert {r.status for r in reports} == {PASS}, [r.identity for r in reports if not r.ok]


def test_regular_character_mixes_in_one_step():
    chain = walk.chain_from_character(4, "regular")
    pi = chain.stationary()
    for lam in chain.states:
        for rho in chain.states:
            assert chain[lam, rho] == pi[rho]


def test_trivial_character_is_identity_and_violates_hypothesis():
    chain = walk.chain_from_character(4, {(4,): 1})
    for i, row in enumerate(chain.matrix):
        assert row[i] == 1 and sum(row) == 1
    assert walk.burnside_brauer_check(chain).status == HYPOTHESIS_VIOLATED
    assert walk.diameter_check(chain).status == HYPOTHESIS_VIOLATED
    with pytest.raises(DisconnectedGraphError):
        walk.weighted_graph_diameter(chain)


def test_sign_character_is_not_faithful():
    chain = walk.chain_from_character(4, {(1, 1, 1, 1): 1})
    rep = walk.burnside_brauer_check(chain)
    assert rep.status == HYPOTHESIS_VIOLATED
    assert (1, 1, 1, 1) in rep.counterexample["kernel_classes"]


def test_power_steps_agree():
    chain = walk.chain_from_character(5, "std")
    for j in range(5):
        for rho in chain.states:
            assert walk.power_step_matrix(chain, rho, j) == walk.power_step_probability(chain, rho, j)


def test_rejects_non_characters():
    with pytest.raises(DomainError):
        walk.chain_from_character(3, [Fraction(1, 2), 0, 1])
    with pytest.raises(DomainError):
        walk.chain_from_character(3, [1, 2])
    with pytest.raises(DomainError):
        walk.as_class_function(3, [1j, 0, 1])
    with pytest.raises(DomainError):
        walk.builtin_character(3, "bogus")


def test_eta_file(tmp_path):
    path = tmp_path / "eta.txt"
    path.write_text("# perm character of S_4\n4 1\n3,1 1\n\n")
    eta = walk.parse_eta_file(path, 4)
    assert eta == walk.builtin_character(4, "perm")
    bad = tmp_path / "bad.txt"
    bad.write_text("3,1 x\n")
    with pytest.raises(DomainError):
        walk.parse_eta_file(bad, 4)
    wrong = tmp_path / "wrong.txt"
    wrong.write_text("5 1\n")
    with pytest.raises(DomainError):
        walk.parse_eta_file(wrong, 4)


def test_decompose_regular():
    from kerov.partitions import syt_count

    mult = walk.decompose(walk.builtin_character(5, "regular"))
    assert all(mult[lam] == syt_count(lam) for lam in mult)
