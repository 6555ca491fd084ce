"""Unique decipherability of uniform-length block codes.

Every code here has blocks of one length ``c``, so two decompositions of the
same word differ by a translation; deciding unique decipherability reduces
to counting the phases (cut offsets mod ``c``) at which every full segment is
a code block.  Partial segments at the edges of a window are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Block, HypothesisError, Language, RangeError, block, show
from .substitution import Substitution, is_infinite, language, power

UNIQUE = "unique"
AMBIGUOUS = "ambiguous"
UNDECODABLE = "undecodable"


@dataclass(frozen=True)
class BlockCode:
    blocks: tuple

    def __post_init__(self):
        bs = tuple(sorted({block(b) for b in self.blocks}))
        if not bs:
            raise RangeError("a block code needs at least one block")
        lengths = {len(b) for b in bs}
        if len(lengths) != 1 or 0 in lengths:
            raise RangeError(f"code blocks must share one positive length, got {sorted(lengths)}")
        object.__setattr__(self, "blocks", bs)
        object.__setattr__(self, "_members", frozenset(bs))

    @classmethod
    def of(cls, blocks: Iterable) -> "BlockCode":
        return cls(tuple(blocks))

    @classmethod
    def images(cls, theta: Substitution, n: int = 1) -> "BlockCode":
        """The code {theta^n(s)}."""
        return cls(power(theta, n).images)

    @property
    def c(self) -> int:
        return len(self.blocks[0])

    def __contains__(self, b) -> bool:
        return block(b) in self._members


def _phases(members: frozenset, c: int, word: tuple) -> list[int]:
    n = len(word)
    out = []
    for p in range(c):
        for i in range(p, n - c + 1, c):
            if word[i : i + c] not in members:
                break
        else:
            out.append(p)
    return out


def surviving_phases(code: BlockCode, word) -> list[int]:
    """Phases p in 0..c-1 such that every full c-segment of ``word``
    starting at p + k*c is a code block."""
    return _phases(code._members, code.c, block(word))


def _cuts(phase: int, c: int, n: int) -> tuple:
    return tuple(range(phase, n - c + 1, c))


@dataclass(frozen=True)
class ParseCertificate:
    """Result of parsing a finite window.

    ``cut_positions`` are the offsets where code blocks begin (unique case);
    ``witness`` holds the cut sets of the two least surviving phases
    (ambiguous case).
    """

    word: Block
    status: str
    phase: int | None = None
    cut_positions: tuple = ()
    witness: tuple = ()

    def segments(self, c: int) -> list:
        return [self.word[i : i + c] for i in self.cut_positions]

    def to_dict(self) -> dict:
        d = {"word": show(self.word), "status": self.status}
        if self.status == UNIQUE:
            d["phase"] = self.phase
            d["cut_positions"] = list(self.cut_positions)
        elif self.status == AMBIGUOUS:
            d["witness"] = [list(w) for w in self.witness]
        return d


def parse_window(code: BlockCode, word) -> ParseCertificate:
    """Decompose ``word`` into code blocks, or show why it cannot be done uniquely."""
    word = block(word)
    c = code.c
    if len(word) < 3 * c:
        raise RangeError(f"word of length {len(word)} shorter than 3*{c}")
    phases = _phases(code._members, c, word)
    n = len(word)
    if not phases:
        return ParseCertificate(word, UNDECODABLE)
    if len(phases) == 1:
        p = phases[0]
        return ParseCertificate(word, UNIQUE, p, _cuts(p, c, n))
    return ParseCertificate(word, AMBIGUOUS, witness=(_cuts(phases[0], c, n), _cuts(phases[1], c, n)))


def recognizability_window(theta: Substitution, K_max: int = 64) -> int | None:
    """Least K <= K_max such that every K-block of X_theta has exactly one
    surviving phase against the code {theta(s)}."""
    verdict = is_infinite(theta)
    if verdict.kind != "infinite":
        raise HypothesisError(
            f"unique decipherability needs an infinite system, got {verdict}"
        )
    code = BlockCode.images(theta)
    for K in range(1, K_max + 1):
        if all(len(surviving_phases(code, b)) == 1 for b in language(theta, K)):
            return K
    return None


@dataclass(frozen=True)
class ParseVerdict:
    status: str
    depth: int
    witness: Block | None = None
    phases: tuple = ()

    @property
    def unique(self) -> bool:
        return self.status == UNIQUE

    def to_dict(self) -> dict:
        d = {"status": self.status, "depth": self.depth}
        if self.witness is not None:
            d["witness"] = show(self.witness)
            d["phases"] = list(self.phases)
        return d


def unique_concatenation(code: BlockCode, y_language, depth: int) -> ParseVerdict:
    """Check that every (depth*c)-block of Y decodes at exactly one phase.

    ``y_language`` is a callable ``n -> Language`` or a mapping from n to
    a Language.  A block with no surviving phase is reported as
    undecodable; the least offending block is the witness.
    """
    if depth < 3:
        raise RangeError("depth must be at least 3")
    n = depth * code.c
    blocks = y_language(n) if callable(y_language) else y_language[n]
    for b in blocks:
        phases = surviving_phases(code, b)
        if len(phases) >= 2:
            return ParseVerdict(AMBIGUOUS, depth, b, tuple(phases[:2]))
        if not phases:
            return ParseVerdict(UNDECODABLE, depth, b, ())
    return ParseVerdict(UNIQUE, depth)
