import random

from helpers import graphs_isomorphic

from chemforge.chem import (
    bundled_corpus,
    canonical_rank,
    canonical_smiles,
    parse_smiles,
    random_molecule,
    same_molecule,
    write_smiles,
)


def test_same_molecule_different_spelling():
    assert canonical_smiles("OCC") == canonical_smiles("CCO")
    assert same_molecule("c1ccccc1C", "Cc1ccccc1")
    assert canonical_smiles("C") == "C"


def test_butane_isobutane_distinct():
    butane = parse_smiles("CCCC")
    isobutane = parse_smiles("CC(C)C")
    # Exhaustive-permutation oracle agrees they are different graphs.
    assert not graphs_isomorphic(butane, isobutane)
    assert canonical_smiles(butane) != canonical_smiles(isobutane)


def test_benzene_ranks_split_deterministically():
    m = parse_smiles("c1ccccc1")
    ranks = canonical_rank(m)
    assert sorted(ranks) == list(range(6))
    # All atoms are symmetry-equivalent, so every rotation of the input
    # must give the same canonical string.
    base = write_smiles(m)
    for shift in range(6):
        perm = [(i + shift) % 6 for i in range(6)]
        assert write_smiles(m.permute(perm)) == base


def test_permuted_ethanol_same_ranks():
    m = parse_smiles("CCO")
    base = sorted(canonical_rank(m))
    perm_graph = m.permute([2, 0, 1])
    assert sorted(canonical_rank(perm_graph)) == base
    assert write_smiles(perm_graph) == write_smiles(m)


def test_roundtrip_uses_independent_oracle():
    rng = random.Random(41)
    for _ in range(60):
        m = random_molecule(rng)
        again = parse_smiles(write_smiles(m))
        assert graphs_isomorphic(m, again)


def test_corpus_roundtrip_sample():
    corpus = bundled_corpus()
    assert len(corpus) == 1000
    rng = random.Random(5)
    for text in rng.sample(corpus, 80):
        first = parse_smiles(text)
        second = parse_smiles(write_smiles(first))
        assert graphs_isomorphic(first, second)


def test_canonical_is_idempotent():
    rng = random.Random(17)
    for _ in range(80):
        m = random_molecule(rng)
        s = write_smiles(m)
        assert canonical_smiles(s) == s


def test_multi_component_sorted():
    a = canonical_smiles("O.CCO")
    b = canonical_smiles("CCO.O")
    assert a == b
    assert "." in a


def test_single_explicit_bond_between_rings_survives():
    base = canonical_smiles("c1ccccc1-c1ccccc1")
    again = canonical_smiles(base)
    assert again == base
    m = parse_smiles(base)
    assert m.n_atoms == 12


def test_isotope_breaks_symmetry():
    plain = canonical_smiles("CC")
    labeled = canonical_smiles("[13CH3]C")
    assert plain != labeled
    assert canonical_smiles(labeled) == labeled
