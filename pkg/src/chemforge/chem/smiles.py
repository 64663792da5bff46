"""SMILES reader.

Supports the organic subset (B, C, N, O, P, S, F, Cl, Br, I) written
bare, aromatic lowercase forms (b, c, n, o, p, s, and se/as inside
brackets), bracket atoms with isotope, chirality tag, hydrogen count,
charge, and atom class for any element in the 118-symbol table, branches,
dot-separated components, and ring closures including the %nn form.

Stereo markers (/ and \\ on bonds, @ and @@ in brackets) are accepted and
survive in the graph's source_smiles text, but they do not influence the
graph: downstream canonicalization and simulation are stereo-blind.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elements import (
    AROMATIC_PI_BONUS,
    AROMATIC_SUBSET,
    ATOMIC_NUMBER,
    DEFAULT_VALENCES,
    ORGANIC_SUBSET,
)
from .errors import (
    BadBracketAtom,
    MissingSide,
    SmilesError,
    UnbalancedParenthesis,
    UnclosedRing,
    UnknownElement,
    ValenceError,
)
from .graph import AtomNode, BondEdge, BondOrder, MolGraph
from .reaction import Reaction

_BOND_CHARS = {
    "-": BondOrder.SINGLE,
    "=": BondOrder.DOUBLE,
    "#": BondOrder.TRIPLE,
    ":": BondOrder.AROMATIC,
    "/": BondOrder.SINGLE,
    "\\": BondOrder.SINGLE,
}

# Two-letter organic-subset symbols must be tried before one-letter ones.
_TWO_LETTER_ORGANIC = ("Cl", "Br")
_ONE_LETTER_ORGANIC = frozenset("BCNOPSFI")
_AROMATIC_BRACKET_EXTRA = {"se": "Se", "as": "As"}


def implicit_hydrogens(symbol: str, aromatic: bool, used: float) -> int | None:
    """Hydrogen count a bare (bracket-free) atom receives.

    ``used`` is the sum of bond orders at the atom with aromatic bonds
    counted as 1 each; aromatic B/C/N/P contribute one more for the ring
    pi electron.  Returns None when no allowed valence fits, meaning the
    atom cannot be written bare.
    """
    if symbol not in ORGANIC_SUBSET:
        return None
    if aromatic and symbol in AROMATIC_PI_BONUS:
        used += 1
    for valence in DEFAULT_VALENCES[symbol]:
        if used <= valence + 1e-9:
            return int(round(valence - used))
    return None


@dataclass
class _Atom:
    """Mutable atom record used during parsing."""

    symbol: str
    offset: int
    aromatic: bool = False
    charge: int = 0
    isotope: int = 0
    explicit_h: int | None = None
    from_bracket: bool = False


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.i = 0
        self.n = len(text)
        self.atoms: list[_Atom] = []
        self.bonds: dict[tuple[int, int], tuple[BondOrder, int]] = {}
        self.prev: int | None = None
        self.pending: BondOrder | None = None
        self.pending_offset = -1
        self.branch_stack: list[int] = []
        # ring number -> (atom index, declared order or None, open offset)
        self.open_rings: dict[int, tuple[int, BondOrder | None, int]] = {}

    # -- small helpers --------------------------------------------------

    def fail(self, cls: type[SmilesError], message: str, offset: int) -> SmilesError:
        return cls(message, self.text, offset)

    def peek(self) -> str:
        return self.text[self.i] if self.i < self.n else ""

    def take(self) -> str:
        ch = self.text[self.i]
        self.i += 1
        return ch

    # -- graph assembly ---------------------------------------------------

    def add_atom(self, atom: _Atom) -> None:
        idx = len(self.atoms)
        self.atoms.append(atom)
        if self.prev is not None:
            self.add_bond(self.prev, idx, self.pending, self.pending_offset)
        elif self.pending is not None:
            raise self.fail(
                SmilesError, "bond symbol with no preceding atom", self.pending_offset
            )
        self.pending = None
        self.pending_offset = -1
        self.prev = idx

    def add_bond(
        self, a: int, b: int, declared: BondOrder | None, offset: int
    ) -> None:
        if a == b:
            raise self.fail(SmilesError, "ring bond closes onto its own atom", offset)
        order = declared
        if order is None:
            both_aromatic = self.atoms[a].aromatic and self.atoms[b].aromatic
            order = BondOrder.AROMATIC if both_aromatic else BondOrder.SINGLE
        key = (a, b) if a < b else (b, a)
        if key in self.bonds:
            raise self.fail(
                SmilesError, f"duplicate bond between atoms {key[0]} and {key[1]}", offset
            )
        where = offset if offset >= 0 else max(self.i - 1, 0)
        self.bonds[key] = (order, where)

    # -- token handlers --------------------------------------------------

    def read_ring_closure(self) -> None:
        offset = self.i
        ch = self.take()
        if ch == "%":
            digits = self.text[self.i : self.i + 2]
            if len(digits) != 2 or not digits.isdigit():
                raise self.fail(
                    SmilesError, "%% ring closure needs two digits", offset
                )
            self.i += 2
            number = int(digits)
        else:
            number = int(ch)
        if self.prev is None:
            raise self.fail(SmilesError, "ring closure before any atom", offset)
        if number in self.open_rings:
            other, declared, _ = self.open_rings.pop(number)
            order = self._resolve_ring_order(declared, self.pending, offset)
            self.add_bond(other, self.prev, order, offset)
        else:
            self.open_rings[number] = (self.prev, self.pending, offset)
        self.pending = None
        self.pending_offset = -1

    def _resolve_ring_order(
        self,
        at_open: BondOrder | None,
        at_close: BondOrder | None,
        offset: int,
    ) -> BondOrder | None:
        if at_open is not None and at_close is not None and at_open != at_close:
            raise self.fail(
                SmilesError, "conflicting bond orders on ring closure", offset
            )
        return at_close if at_close is not None else at_open

    def read_organic_atom(self) -> None:
        offset = self.i
        two = self.text[self.i : self.i + 2]
        if two in _TWO_LETTER_ORGANIC:
            self.i += 2
            self.add_atom(_Atom(two, offset))
            return
        ch = self.take()
        if ch in _ONE_LETTER_ORGANIC:
            self.add_atom(_Atom(ch, offset))
        elif ch in AROMATIC_SUBSET:
            self.add_atom(_Atom(ch.upper(), offset, aromatic=True))
        else:
            raise self.fail(UnknownElement, f"unknown atom symbol {ch!r}", offset)

    def read_bracket_atom(self) -> None:
        start = self.i
        self.take()  # consume '['
        end = self.text.find("]", self.i)
        if end < 0:
            raise self.fail(BadBracketAtom, "unterminated bracket atom", start)
        body = self.text[self.i : end]
        if not body:
            raise self.fail(BadBracketAtom, "empty bracket atom", start)
        atom = self._parse_bracket_body(body, start + 1)
        self.i = end + 1
        atom.from_bracket = True
        self.add_atom(atom)

    def _parse_bracket_body(self, body: str, base: int) -> _Atom:
        j = 0
        n = len(body)

        isotope = 0
        while j < n and body[j].isdigit():
            isotope = isotope * 10 + int(body[j])
            j += 1
            if j - 0 > 3:
                raise self.fail(BadBracketAtom, "isotope number too long", base)
        has_isotope = j > 0

        sym_start = j
        symbol = ""
        aromatic = False
        if j < n and body[j].isupper():
            symbol = body[j]
            j += 1
            if j < n and body[j].islower() and symbol + body[j] in ATOMIC_NUMBER:
                symbol += body[j]
                j += 1
        elif j < n and body[j].islower():
            two = body[j : j + 2]
            if two in _AROMATIC_BRACKET_EXTRA:
                symbol = _AROMATIC_BRACKET_EXTRA[two]
                aromatic = True
                j += 2
            elif body[j] in AROMATIC_SUBSET:
                symbol = body[j].upper()
                aromatic = True
                j += 1
        if not symbol:
            raise self.fail(
                BadBracketAtom, "bracket atom lacks an element symbol", base + sym_start
            )
        if symbol not in ATOMIC_NUMBER:
            raise self.fail(
                UnknownElement, f"unknown element {symbol!r}", base + sym_start
            )
        if symbol == "H":
            raise self.fail(
                BadBracketAtom,
                "hydrogen atoms are implicit; put an H count on a heavy atom",
                base + sym_start,
            )

        # Chirality tags: parsed, not interpreted.
        if j < n and body[j] == "@":
            j += 1
            if j < n and body[j] == "@":
                j += 1

        explicit_h = 0
        if j < n and body[j] == "H":
            j += 1
            count = 0
            digits = 0
            while j < n and body[j].isdigit():
                count = count * 10 + int(body[j])
                j += 1
                digits += 1
            explicit_h = count if digits else 1

        charge = 0
        if j < n and body[j] in "+-":
            sign = 1 if body[j] == "+" else -1
            first = body[j]
            j += 1
            if j < n and body[j].isdigit():
                mag = 0
                while j < n and body[j].isdigit():
                    mag = mag * 10 + int(body[j])
                    j += 1
                charge = sign * mag
            else:
                mag = 1
                while j < n and body[j] == first:
                    mag += 1
                    j += 1
                charge = sign * mag

        if j < n and body[j] == ":":
            j += 1
            digits = 0
            while j < n and body[j].isdigit():
                j += 1
                digits += 1
            if not digits:
                raise self.fail(
                    BadBracketAtom, "atom class ':' needs digits", base + j
                )

        if j != n:
            raise self.fail(
                BadBracketAtom,
                f"unexpected text {body[j:]!r} in bracket atom",
                base + j,
            )
        return _Atom(
            symbol,
            base,
            aromatic=aromatic,
            charge=charge,
            isotope=isotope if has_isotope else 0,
            explicit_h=explicit_h,
        )

    # -- main loop --------------------------------------------------------

    def run(self) -> MolGraph:
        if not self.text:
            raise self.fail(SmilesError, "empty molecule string", 0)
        while self.i < self.n:
            ch = self.peek()
            if ch == "[":
                self.read_bracket_atom()
            elif ch.isdigit() or ch == "%":
                self.read_ring_closure()
            elif ch in _BOND_CHARS:
                if self.pending is not None:
                    raise self.fail(SmilesError, "two bond symbols in a row", self.i)
                self.pending = _BOND_CHARS[ch]
                self.pending_offset = self.i
                self.take()
            elif ch == "(":
                if self.prev is None:
                    raise self.fail(
                        UnbalancedParenthesis, "branch opens before any atom", self.i
                    )
                self.branch_stack.append(self.prev)
                self.take()
            elif ch == ")":
                if not self.branch_stack:
                    raise self.fail(
                        UnbalancedParenthesis, "unmatched closing parenthesis", self.i
                    )
                if self.pending is not None:
                    raise self.fail(
                        SmilesError, "dangling bond before ')'", self.pending_offset
                    )
                self.prev = self.branch_stack.pop()
                self.take()
            elif ch == ".":
                if self.branch_stack:
                    raise self.fail(
                        SmilesError, "component separator inside a branch", self.i
                    )
                if self.pending is not None:
                    raise self.fail(
                        SmilesError, "dangling bond before '.'", self.pending_offset
                    )
                if self.prev is None:
                    raise self.fail(SmilesError, "empty component before '.'", self.i)
                self.prev = None
                self.take()
            elif ch.isalpha():
                self.read_organic_atom()
            else:
                raise self.fail(SmilesError, f"unexpected character {ch!r}", self.i)

        if self.branch_stack:
            raise self.fail(
                UnbalancedParenthesis,
                f"{len(self.branch_stack)} branch(es) never closed",
                self.n,
            )
        if self.open_rings:
            numbers = ", ".join(str(k) for k in sorted(self.open_rings))
            raise self.fail(
                UnclosedRing, f"ring closure(s) {numbers} never matched", self.n
            )
        if self.pending is not None:
            raise self.fail(
                SmilesError, "dangling bond at end of input", self.pending_offset
            )
        if self.prev is None and not self.atoms:
            raise self.fail(SmilesError, "no atoms in molecule string", 0)
        return self.build()

    def build(self) -> MolGraph:
        order_sum = [0.0] * len(self.atoms)
        arom_bonds = [0] * len(self.atoms)
        for (a, b), (order, offset) in self.bonds.items():
            if order is BondOrder.AROMATIC:
                for idx in (a, b):
                    if not self.atoms[idx].aromatic:
                        raise self.fail(
                            SmilesError,
                            "aromatic bond touches a non-aromatic atom",
                            offset,
                        )
                arom_bonds[a] += 1
                arom_bonds[b] += 1
            else:
                order_sum[a] += order.value
                order_sum[b] += order.value

        nodes = []
        for idx, rec in enumerate(self.atoms):
            h = rec.explicit_h
            if h is None:
                h = self._implicit_h(rec, order_sum[idx] + arom_bonds[idx])
            nodes.append(
                AtomNode(
                    symbol=rec.symbol,
                    charge=rec.charge,
                    h_count=h,
                    aromatic=rec.aromatic,
                    isotope=rec.isotope,
                )
            )
        edges = tuple(
            BondEdge(a, b, order) for (a, b), (order, _) in sorted(self.bonds.items())
        )
        return MolGraph(tuple(nodes), edges, source_smiles=self.text)

    def _implicit_h(self, rec: _Atom, used: float) -> int:
        h = implicit_hydrogens(rec.symbol, rec.aromatic, used)
        if h is None:
            allowed = DEFAULT_VALENCES.get(rec.symbol, ())
            raise self.fail(
                ValenceError,
                f"atom {rec.symbol} has bond order sum {used:g}, "
                f"above its maximum valence "
                f"{allowed[-1] if allowed else 'n/a'}",
                rec.offset,
            )
        return h


def parse_smiles(text: str) -> MolGraph:
    """Parse a molecule string into a MolGraph.

    Implicit hydrogen counts are resolved from the default-valence table;
    explicit counts inside brackets are taken as written.  Raises a
    SmilesError subclass with a byte offset on any malformed input.
    """
    return _Parser(text).run()


def parse_reaction(text: str) -> Reaction:
    """Parse a ``reactants>agents>products`` reaction string.

    Each side is a dot-separated molecule list; the agents side may be
    empty.  Component errors are re-raised with the component named and
    the offset shifted into the full reaction string.
    """
    parts = text.split(">")
    if len(parts) != 3:
        raise MissingSide(
            f"reaction string must have exactly two '>' separators, found {len(parts) - 1}",
            text,
            0,
        )
    side_names = ("reactants", "agents", "products")
    sides: list[tuple[MolGraph, ...]] = []
    cursor = 0
    for name, chunk in zip(side_names, parts):
        mols = []
        if chunk:
            comp_start = cursor
            for comp in chunk.split("."):
                try:
                    mols.append(parse_smiles(comp))
                except SmilesError as err:
                    raise err.shifted(
                        comp_start, f"in {name} component {comp!r}", text
                    ) from None
                comp_start += len(comp) + 1
        sides.append(tuple(mols))
        cursor += len(chunk) + 1
    reactants, agents, products = sides
    if not reactants:
        raise MissingSide("reaction has no reactants", text, 0)
    if not products:
        raise MissingSide(
            "reaction has no products", text, len(parts[0]) + len(parts[1]) + 2
        )
    return Reaction(reactants, agents, products)
