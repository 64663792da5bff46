"""Error types raised while reading molecule and reaction strings.

Every syntax error carries the offending text and a byte offset into it;
the message renders both so failures point at the exact character.
"""

from __future__ import annotations


class SmilesError(ValueError):
    """Base class for molecule-string syntax and semantics errors."""

    def __init__(self, message: str, text: str = "", offset: int = -1) -> None:
        self.reason = message
        self.text = text
        self.offset = offset
        super().__init__(self._format())

    def _format(self) -> str:
        if self.offset < 0:
            return self.reason
        snippet = self.text if len(self.text) <= 60 else self.text[:57] + "..."
        return f"{self.reason} at byte {self.offset} in {snippet!r}"

    def shifted(self, delta: int, context: str, full_text: str) -> "SmilesError":
        """Copy of this error re-anchored inside a larger string."""
        clone = type(self)(
            f"{context}: {self.reason}",
            full_text,
            self.offset + delta if self.offset >= 0 else -1,
        )
        return clone


class UnclosedRing(SmilesError):
    """A ring-closure digit was opened but never matched."""


class UnbalancedParenthesis(SmilesError):
    """Branch parentheses do not balance."""


class UnknownElement(SmilesError):
    """An atom symbol is not in the supported element table."""


class BadBracketAtom(SmilesError):
    """A bracket atom expression is malformed."""


class ValenceError(SmilesError):
    """An atom's bonds exceed every allowed valence for its element."""


class MissingSide(SmilesError):
    """A reaction string has an empty reactant or product side."""
