import random

from chemforge.chem import (
    heavy_atom_count,
    molecular_formula,
    monoisotopic_mass,
    parse_smiles,
    random_molecule,
)
from chemforge.chem.elements import ISOTOPE_MASS, MONOISOTOPIC_MASS


def test_formula_examples():
    assert molecular_formula(parse_smiles("CCO")) == "C2H6O"
    assert molecular_formula(parse_smiles("C")) == "CH4"
    assert molecular_formula(parse_smiles("c1ccccc1")) == "C6H6"


def test_formula_hill_order_without_carbon():
    assert molecular_formula(parse_smiles("[NH4+]")) == "H4N+"
    assert molecular_formula(parse_smiles("O")) == "H2O"
    assert molecular_formula(parse_smiles("[O-]S(=O)(=O)[O-]")) == "O4S-2"


def test_formula_charge_suffix():
    assert molecular_formula(parse_smiles("C[N+](C)(C)C")).endswith("N+")


def test_mass_examples():
    assert abs(monoisotopic_mass(parse_smiles("C")) - 16.0313) < 5e-4
    assert abs(monoisotopic_mass(parse_smiles("CCO")) - 46.0419) < 5e-4
    assert abs(monoisotopic_mass(parse_smiles("[13CH4]")) - 17.0347) < 5e-4


def test_heavy_atom_count():
    assert heavy_atom_count(parse_smiles("CCO")) == 3
    assert heavy_atom_count(parse_smiles("C")) == 1
    assert heavy_atom_count(parse_smiles("c1ccccc1")) == 6


def _formula_counts(formula: str) -> dict[str, int]:
    counts: dict[str, int] = {}
    i = 0
    while i < len(formula):
        ch = formula[i]
        if ch in "+-":
            break
        symbol = ch
        i += 1
        if i < len(formula) and formula[i].islower():
            symbol += formula[i]
            i += 1
        digits = ""
        while i < len(formula) and formula[i].isdigit():
            digits += formula[i]
            i += 1
        counts[symbol] = counts.get(symbol, 0) + (int(digits) if digits else 1)
    return counts


def test_mass_matches_formula_accounting():
    # Sum of per-element principal masses from the formula string must
    # agree with the direct mass for unlabeled molecules.
    rng = random.Random(23)
    checked = 0
    while checked < 60:
        m = random_molecule(rng, allow_isotope=False)
        counts = _formula_counts(molecular_formula(m))
        expect = sum(MONOISOTOPIC_MASS[s] * n for s, n in counts.items())
        assert abs(expect - monoisotopic_mass(m)) < 1e-4
        checked += 1


def test_isotope_label_shifts_mass():
    d = monoisotopic_mass(parse_smiles("[13CH4]")) - monoisotopic_mass(
        parse_smiles("C")
    )
    expect = ISOTOPE_MASS[("C", 13)] - MONOISOTOPIC_MASS["C"]
    assert abs(d - expect) < 1e-9
