"""Symbols, blocks and n-block languages.

A symbol is a non-empty string token, a block is a tuple of tokens and a
:class:`Language` is a sorted, deduplicated set of blocks of one length.
Bi-infinite points are never materialised; everything works on finite
windows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Symbol = str
Block = tuple  # tuple[Symbol, ...]


class SubstitutionError(Exception):
    """Base class for every error raised by this package."""


class RangeError(SubstitutionError, ValueError):
    pass


class AlphabetError(SubstitutionError, ValueError):
    pass


class ConstantLengthError(SubstitutionError, ValueError):
    pass


class DuplicateError(SubstitutionError, ValueError):
    pass


class FormatError(SubstitutionError, ValueError):
    pass


class PrimitivityError(SubstitutionError):
    pass


class HypothesisError(SubstitutionError):
    """A theorem hypothesis (one-to-one, infinite, L >= 3, ...) does not hold."""


class SupportError(SubstitutionError, KeyError):
    """A local rule was evaluated on a window outside its table."""

    def __str__(self):
        return Exception.__str__(self)


class WellDefinednessError(SubstitutionError):
    pass


def block(word) -> Block:
    """Coerce ``word`` to a block.

    Strings containing whitespace are split into tokens, other strings are
    read one character per symbol; any other iterable is taken token-wise.

    >>> block("0110")
    ('0', '1', '1', '0')
    >>> block("001 010")
    ('001', '010')
    """
    if isinstance(word, str):
        parts = word.split()
        if len(parts) == 1 and len(parts[0]) == len(word):
            return tuple(word)
        return tuple(parts)
    return tuple(word)


def show(b: Sequence[Symbol]) -> str:
    """Render a block: plain concatenation for single-character tokens,
    space separated otherwise."""
    if all(len(s) == 1 for s in b):
        return "".join(b)
    return " ".join(b)


def join_symbol(b: Sequence[Symbol]) -> Symbol:
    """Fuse a block into one composite token, e.g. ``('0','0','1') -> '001'``."""
    if all(len(s) == 1 for s in b):
        return "".join(b)
    return ".".join(b)


@dataclass(frozen=True)
class Language:
    """The blocks of length ``n`` of some subshift, kept sorted."""

    n: int
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(set(self.blocks))))
        if any(len(b) != self.n for b in self.blocks):
            raise RangeError(f"every block of a level-{self.n} language must have length {self.n}")
        object.__setattr__(self, "_members", frozenset(self.blocks))

    @classmethod
    def of(cls, n: int, blocks: Iterable) -> "Language":
        return cls(n, tuple(block(b) for b in blocks))

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __contains__(self, b) -> bool:
        return block(b) in self._members

    def as_set(self) -> frozenset:
        return self._members

    def strings(self) -> list[str]:
        return [show(b) for b in self.blocks]


def windows(b: Sequence, n: int) -> Iterator[Block]:
    """All contiguous length-``n`` windows of ``b`` in order (with repeats)."""
    b = tuple(b)
    for i in range(len(b) - n + 1):
        yield b[i : i + n]


def subblocks(b, n: int) -> Language:
    """The distinct length-``n`` subblocks of ``b``.

    >>> subblocks("0110", 2).strings()
    ['01', '10', '11']
    """
    b = block(b)
    if not 0 < n <= len(b):
        raise RangeError(f"subblock length {n} outside 1..{len(b)}")
    return Language(n, tuple(windows(b, n)))


def concat(bs: Iterable, alphabet: Iterable[Symbol] | None = None) -> Block:
    """Concatenate blocks left to right.

    With ``alphabet`` given, every block must be over it.  Without it, the
    blocks must agree on token style: mixing single-character and
    multi-character tokens is reported as an alphabet error.
    """
    parts = [block(b) for b in bs]
    out = tuple(s for p in parts for s in p)
    if alphabet is not None:
        allowed = set(alphabet)
        bad = sorted(set(out) - allowed)
        if bad:
            raise AlphabetError(f"symbols {bad} not in alphabet")
    else:
        styles = {len(s) == 1 for s in out}
        if len(styles) > 1:
            raise AlphabetError("blocks mix single-character and composite symbols")
    return out
