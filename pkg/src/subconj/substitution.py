"""Constant-length substitutions and the languages of their minimal systems."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .core import (
    AlphabetError,
    Block,
    ConstantLengthError,
    DuplicateError,
    FormatError,
    Language,
    PrimitivityError,
    RangeError,
    block,
    show,
    windows,
)


@dataclass(frozen=True)
class Substitution:
    """A map sending each symbol of ``alphabet`` to a block of length ``L``.

    ``images[i]`` is the image of ``alphabet[i]``.
    """

    alphabet: tuple
    images: tuple
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        images = tuple(block(im) for im in self.images)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "images", images)
        if len(set(alphabet)) != len(alphabet):
            raise DuplicateError("alphabet symbols must be distinct")
        if len(images) != len(alphabet):
            raise RangeError("need exactly one image per symbol")
        lengths = {len(im) for im in images}
        if len(lengths) > 1:
            raise ConstantLengthError(f"images have unequal lengths {sorted(lengths)}")
        if not images or images[0].__len__() < 2:
            raise RangeError("substitution length must be at least 2")
        known = set(alphabet)
        for s, im in zip(alphabet, images):
            bad = [x for x in im if x not in known]
            if bad:
                raise AlphabetError(f"image of {s!r} uses undeclared symbol {bad[0]!r}")
        object.__setattr__(self, "_index", dict(zip(alphabet, images)))

    @classmethod
    def from_mapping(cls, rules: Mapping) -> "Substitution":
        """``Substitution.from_mapping({"0": "01", "1": "10"})``"""
        return cls(tuple(rules), tuple(block(v) for v in rules.values()))

    @property
    def L(self) -> int:
        return len(self.images[0])

    def __getitem__(self, s) -> Block:
        try:
            return self._index[s]
        except KeyError:
            raise AlphabetError(f"symbol {s!r} not in alphabet") from None

    def __call__(self, b) -> Block:
        return apply(self, b)

    def items(self):
        return zip(self.alphabet, self.images)


def parse_substitution(text: str) -> Substitution:
    """Read the ``LHS -> RHS1 RHS2 ... RHSL`` rule format.

    Tokens are whitespace separated, ``#`` starts a comment line and blank
    lines are skipped.  Alphabet order is the order of the left-hand sides.
    """
    alphabet: list = []
    images: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise FormatError(f"line {lineno}: expected 'LHS -> RHS ...'")
        lhs, rhs = line.split("->", 1)
        lhs_tokens = lhs.split()
        if len(lhs_tokens) != 1:
            raise FormatError(f"line {lineno}: left-hand side must be one symbol")
        s = lhs_tokens[0]
        if s in alphabet:
            raise DuplicateError(f"line {lineno}: duplicate rule for {s!r}")
        alphabet.append(s)
        images.append(tuple(rhs.split()))
    if not alphabet:
        raise FormatError("no rules found")
    lengths = {len(im) for im in images}
    if len(lengths) > 1:
        raise ConstantLengthError(f"images have unequal lengths {sorted(lengths)}")
    return Substitution(tuple(alphabet), tuple(images))


def format_substitution(theta: Substitution, sort: bool = False) -> str:
    """Inverse of :func:`parse_substitution`."""
    items = sorted(theta.items()) if sort else list(theta.items())
    return "".join(f"{s} -> {' '.join(im)}\n" for s, im in items)


def apply(theta: Substitution, b) -> Block:
    """theta extended to blocks by concatenation."""
    out: list = []
    for s in block(b):
        out.extend(theta[s])
    return tuple(out)


def power(theta: Substitution, n: int) -> Substitution:
    if n < 1:
        raise RangeError("power exponent must be >= 1")
    images = list(theta.images)
    for _ in range(n - 1):
        images = [apply(theta, im) for im in images]
    return Substitution(theta.alphabet, tuple(images))


def is_one_to_one(theta: Substitution) -> bool:
    return len(set(theta.images)) == len(theta.images)


def incidence(theta: Substitution) -> np.ndarray:
    """Entry ``[i, j]`` counts occurrences of ``alphabet[i]`` in the image of ``alphabet[j]``."""
    pos = {s: i for i, s in enumerate(theta.alphabet)}
    M = np.zeros((len(pos), len(pos)), dtype=np.int64)
    for j, im in enumerate(theta.images):
        for s in im:
            M[pos[s], j] += 1
    return M


def wielandt_bound(size: int) -> int:
    return (size - 1) ** 2 + 1


def is_primitive(theta: Substitution) -> bool:
    """Some power of the incidence matrix is entrywise positive.

    Only powers up to the Wielandt bound need checking.
    """
    M = (incidence(theta) > 0).astype(np.int64)
    P = M.copy()
    for _ in range(wielandt_bound(len(theta.alphabet))):
        if P.all():
            return True
        P = ((P @ M) > 0).astype(np.int64)
    return False


def _require_primitive(theta: Substitution) -> None:
    if not is_primitive(theta):
        raise PrimitivityError(
            "substitution is not primitive; its minimal system is not uniquely determined"
        )


@functools.lru_cache(maxsize=4096)
def _language_blocks(theta: Substitution, n: int) -> frozenset:
    if n == 1:
        return frozenset((s,) for s in theta.alphabet)
    # seed: n-blocks inside theta^j(s) for the least j with L^j >= n
    seeds = [(s,) for s in theta.alphabet]
    while len(seeds[0]) < n:
        seeds = [apply(theta, w) for w in seeds]
    current = {w for seed in seeds for w in windows(seed, n)}
    frontier = set(current)
    # an n-block of theta(x) spans at most n letters of x, so the closure is exact
    while frontier:
        fresh = set()
        for w in frontier:
            for u in windows(apply(theta, w), n):
                if u not in current:
                    fresh.add(u)
        current |= fresh
        frontier = fresh
    return frozenset(current)


def language(theta: Substitution, n: int) -> Language:
    """The n-blocks appearing in the minimal system generated by ``theta``."""
    if n < 1:
        raise RangeError("block length must be >= 1")
    _require_primitive(theta)
    return Language(n, tuple(_language_blocks(theta, n)))


def complexity(theta: Substitution, n: int) -> int:
    return len(language(theta, n))


@dataclass(frozen=True)
class InfiniteVerdict:
    """Outcome of :func:`is_infinite`.  ``kind`` is ``"infinite"``,
    ``"finite"`` or ``"inconclusive"``; ``probed`` is the largest n tried."""

    kind: str
    probed: int
    period: int | None = None

    def __str__(self):
        if self.kind == "finite":
            return f"Finite(period {self.period})"
        return f"{self.kind.capitalize()} (probed n <= {self.probed})"


def default_probe_bound(theta: Substitution) -> int:
    return theta.L * len(theta.alphabet) ** 2


def is_infinite(theta: Substitution, probe_bound: int | None = None) -> InfiniteVerdict:
    """Decide whether the minimal system of ``theta`` is infinite.

    A plateau p(n+1) == p(n) of the complexity function proves the system is
    one periodic orbit of period p(n).  Strict growth with p(n) > n up to a
    probe bound of at least L * |alphabet|**2 is reported as infinite.
    """
    _require_primitive(theta)
    threshold = default_probe_bound(theta)
    if probe_bound is None:
        probe_bound = threshold
    prev = complexity(theta, 1)
    grows = prev > 1
    for n in range(1, probe_bound):
        p = complexity(theta, n + 1)
        if p == prev:
            return InfiniteVerdict("finite", n, period=prev)
        grows = grows and p > n + 1
        prev = p
    if grows and probe_bound >= threshold:
        return InfiniteVerdict("infinite", probe_bound)
    return InfiniteVerdict("inconclusive", probe_bound)


# Named fixtures used throughout tests and demos.
MORSE = Substitution(("0", "1"), (("0", "1"), ("1", "0")))
TOEPLITZ = Substitution(("0", "1"), (("0", "1"), ("0", "0")))


def describe(theta: Substitution) -> str:
    return ", ".join(f"{s}->{show(im)}" for s, im in theta.items())
