"""Periodic-table data: symbols, monoisotopic masses, and valence rules.

Masses are the exact masses of the most abundant natural isotope (for
elements without stable isotopes, the most stable one), taken from the
standard NIST atomic-mass tables.
"""

from __future__ import annotations

# Indexed by atomic number; SYMBOLS[0] is a placeholder.
SYMBOLS: tuple[str, ...] = (
    "*",
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne",
    "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar", "K", "Ca",
    "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn",
    "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr",
    "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn",
    "Sb", "Te", "I", "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
    "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb",
    "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg",
    "Tl", "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th",
    "Pa", "U", "Np", "Pu", "Am", "Cm", "Bk", "Cf", "Es", "Fm",
    "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs", "Mt", "Ds",
    "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
)

ATOMIC_NUMBER: dict[str, int] = {s: z for z, s in enumerate(SYMBOLS) if z > 0}

# Exact mass of the principal isotope, in Daltons.
MONOISOTOPIC_MASS: dict[str, float] = {
    "H": 1.00782503207, "He": 4.002603254, "Li": 7.01600344, "Be": 9.0121831,
    "B": 11.00930536, "C": 12.0, "N": 14.0030740048, "O": 15.9949146196,
    "F": 18.9984031627, "Ne": 19.9924401762, "Na": 22.989769282,
    "Mg": 23.985041697, "Al": 26.98153853, "Si": 27.9769265347,
    "P": 30.9737619984, "S": 31.9720711744, "Cl": 34.968852682,
    "Ar": 39.9623831237, "K": 38.9637064864, "Ca": 39.962590863,
    "Sc": 44.95590828, "Ti": 47.94794198, "V": 50.94395704,
    "Cr": 51.94050623, "Mn": 54.93804391, "Fe": 55.93493633,
    "Co": 58.93319429, "Ni": 57.93534241, "Cu": 62.92959772,
    "Zn": 63.92914201, "Ga": 68.9255735, "Ge": 73.921177761,
    "As": 74.92159457, "Se": 79.9165218, "Br": 78.9183376,
    "Kr": 83.9114977282, "Rb": 84.9117897379, "Sr": 87.9056125,
    "Y": 88.9058403, "Zr": 89.9046977, "Nb": 92.906373, "Mo": 97.90540482,
    "Tc": 97.9072124, "Ru": 101.9043441, "Rh": 102.905498,
    "Pd": 105.9034804, "Ag": 106.9050916, "Cd": 113.90336509,
    "In": 114.903878776, "Sn": 119.90220163, "Sb": 120.903812,
    "Te": 129.906222748, "I": 126.9044719, "Xe": 131.9041550856,
    "Cs": 132.905451961, "Ba": 137.905247, "La": 138.9063563,
    "Ce": 139.9054431, "Pr": 140.9076576, "Nd": 141.907729,
    "Pm": 144.9127559, "Sm": 151.9197397, "Eu": 152.921238,
    "Gd": 157.9241123, "Tb": 158.9253547, "Dy": 163.9291819,
    "Ho": 164.9303288, "Er": 165.9302995, "Tm": 168.9342179,
    "Yb": 173.9388664, "Lu": 174.9407752, "Hf": 179.946557,
    "Ta": 180.9479958, "W": 183.95093092, "Re": 186.9557501,
    "Os": 191.961477, "Ir": 192.9629216, "Pt": 194.9647917,
    "Au": 196.96656879, "Hg": 201.9706434, "Tl": 204.9744278,
    "Pb": 207.9766525, "Bi": 208.9803991, "Po": 208.9824308,
    "At": 209.9871479, "Rn": 222.0175782, "Fr": 223.019736,
    "Ra": 226.0254103, "Ac": 227.0277523, "Th": 232.0380558,
    "Pa": 231.0358842, "U": 238.0507884, "Np": 237.0481736,
    "Pu": 244.0642053, "Am": 243.0613813, "Cm": 247.0703541,
    "Bk": 247.0703073, "Cf": 251.0795886, "Es": 252.08298,
    "Fm": 257.0951061, "Md": 258.0984315, "No": 259.10103,
    "Lr": 262.10961, "Rf": 267.12179, "Db": 268.12567, "Sg": 271.13393,
    "Bh": 272.13826, "Hs": 270.13429, "Mt": 276.15159, "Ds": 281.16451,
    "Rg": 280.16514, "Cn": 285.17712, "Nh": 284.17873, "Fl": 289.19042,
    "Mc": 288.19274, "Lv": 293.20449, "Ts": 292.20746, "Og": 294.21392,
}

# Exact masses for the isotope labels that actually occur in labelled
# compounds.  Anything missing here falls back to shifting the principal
# mass by whole neutron counts (see isotope_mass).
ISOTOPE_MASS: dict[tuple[str, int], float] = {
    ("H", 1): 1.00782503207, ("H", 2): 2.01410177812, ("H", 3): 3.01604928,
    ("Li", 6): 6.01512289, ("Li", 7): 7.01600344,
    ("B", 10): 10.01293695, ("B", 11): 11.00930536,
    ("C", 12): 12.0, ("C", 13): 13.0033548351, ("C", 14): 14.003241988,
    ("N", 14): 14.0030740048, ("N", 15): 15.0001088989,
    ("O", 16): 15.9949146196, ("O", 17): 16.9991317565, ("O", 18): 17.9991596129,
    ("Si", 28): 27.9769265347, ("Si", 29): 28.9764946649, ("Si", 30): 29.973770136,
    ("S", 32): 31.9720711744, ("S", 33): 32.9714589098,
    ("S", 34): 33.967867004, ("S", 36): 35.96708071,
    ("Cl", 35): 34.968852682, ("Cl", 37): 36.965902602,
    ("Br", 79): 78.9183376, ("Br", 81): 80.9162897,
    ("I", 127): 126.9044719,
}

NEUTRON_MASS = 1.00866491588
H_MASS = MONOISOTOPIC_MASS["H"]

# Principal mass number per element, for the neutron-shift fallback.
_PRINCIPAL_A: dict[str, int] = {s: round(m) for s, m in MONOISOTOPIC_MASS.items()}

# Atoms readable outside brackets, and the subset that may be written in
# lowercase aromatic form.
ORGANIC_SUBSET = frozenset({"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"})
AROMATIC_SUBSET = frozenset({"b", "c", "n", "o", "p", "s"})

# Allowed total valences for implicit-hydrogen assignment, ascending.
DEFAULT_VALENCES: dict[str, tuple[int, ...]] = {
    "B": (3,),
    "C": (4,),
    "N": (3,),
    "O": (2,),
    "P": (3, 5),
    "S": (2, 4, 6),
    "F": (1,),
    "Cl": (1,),
    "Br": (1,),
    "I": (1,),
}

# Aromatic atoms that donate one pi electron to the ring get +1 effective
# valence; aromatic O/S contribute a lone pair instead, so they do not.
AROMATIC_PI_BONUS = frozenset({"B", "C", "N", "P"})


def monoisotopic_element_mass(symbol: str) -> float:
    """Exact mass of the principal isotope of an element."""
    try:
        return MONOISOTOPIC_MASS[symbol]
    except KeyError:
        raise KeyError(f"no mass data for element {symbol!r}") from None


def isotope_mass(symbol: str, mass_number: int) -> float:
    """Exact mass of a specific isotope.

    Uses the exact table where available; otherwise shifts the principal
    isotope mass by whole neutrons, which is accurate to a few mDa.
    """
    exact = ISOTOPE_MASS.get((symbol, mass_number))
    if exact is not None:
        return exact
    base = monoisotopic_element_mass(symbol)
    return base + (mass_number - _PRINCIPAL_A[symbol]) * NEUTRON_MASS
