"""Sliding block codes given by finite local rules.

A :class:`LocalRule` with memory ``m`` and anticipation ``a`` maps a point
``x`` to ``y`` with ``y[i] = f(x[i-m], ..., x[i+a])``.  On a finite block the
output is aligned so that output position ``i`` comes from the window that
starts at input position ``i``; ``m`` symbols are consumed on the left and
``a`` on the right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .core import (
    AlphabetError,
    Block,
    FormatError,
    Language,
    RangeError,
    SupportError,
    block,
    show,
    windows,
)
from .substitution import Substitution, language


@dataclass(frozen=True)
class LocalRule:
    """A block map table.  The keys of ``table`` are its support."""

    memory: int
    anticipation: int
    table: tuple  # sorted ((window, symbol), ...)
    domain_alphabet: tuple = ()
    codomain_alphabet: tuple = ()
    _lookup: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.memory < 0 or self.anticipation < 0:
            raise RangeError("memory and anticipation must be >= 0")
        items = tuple(sorted((block(k), v) for k, v in dict(self.table).items()))
        w = self.width
        if any(len(k) != w for k, _ in items):
            raise RangeError(f"every table key must have length {w}")
        object.__setattr__(self, "table", items)
        dom = set(self.domain_alphabet) | {s for k, _ in items for s in k}
        cod = set(self.codomain_alphabet) | {v for _, v in items}
        object.__setattr__(self, "domain_alphabet", tuple(sorted(dom)))
        object.__setattr__(self, "codomain_alphabet", tuple(sorted(cod)))
        object.__setattr__(self, "_lookup", dict(items))

    @property
    def width(self) -> int:
        return self.memory + 1 + self.anticipation

    @property
    def support(self) -> Language:
        return Language(self.width, tuple(self._lookup))

    def __call__(self, window) -> str:
        try:
            return self._lookup[tuple(window)]
        except KeyError:
            raise SupportError(f"window {show(window)!r} outside rule support") from None

    @classmethod
    def from_function(
        cls,
        func: Callable[[Block], str],
        alphabet: Iterable[str],
        memory: int = 0,
        anticipation: int = 0,
        support: Iterable | None = None,
    ) -> "LocalRule":
        """Tabulate ``func`` on ``support`` (default: every window over ``alphabet``)."""
        alphabet = tuple(alphabet)
        w = memory + 1 + anticipation
        if support is None:
            support = itertools.product(alphabet, repeat=w)
        table = {tuple(k): func(tuple(k)) for k in support}
        return cls(memory, anticipation, tuple(table.items()), domain_alphabet=alphabet)


def identity_rule(alphabet: Iterable[str]) -> LocalRule:
    return LocalRule.from_function(lambda x: x[0], alphabet)


def constant_rule(alphabet: Iterable[str], value: str = "0") -> LocalRule:
    return LocalRule.from_function(lambda x: value, alphabet)


def apply_rule(f: LocalRule, b) -> Block:
    b = block(b)
    if len(b) < f.width:
        raise RangeError(f"block of length {len(b)} shorter than rule window {f.width}")
    look = f._lookup
    out = []
    for i in range(len(b) - f.width + 1):
        w = b[i : i + f.width]
        try:
            out.append(look[w])
        except KeyError:
            raise SupportError(f"window {show(w)!r} outside rule support") from None
    return tuple(out)


def extend(f: LocalRule, memory: int, anticipation: int, support: Iterable | None = None) -> LocalRule:
    """Widen ``f`` with superfluous variables.

    ``support`` restricts the widened table (e.g. to a subshift language);
    by default every padding over the domain alphabet is tabulated.
    """
    if memory < f.memory or anticipation < f.anticipation:
        raise RangeError("extend can only widen a rule")
    if (memory, anticipation) == (f.memory, f.anticipation) and support is None:
        return f
    dl = memory - f.memory
    w = f.width
    table = {}
    if support is None:
        alph = f.domain_alphabet
        right = anticipation - f.anticipation
        for core, v in f.table:
            for left_pad in itertools.product(alph, repeat=dl):
                for right_pad in itertools.product(alph, repeat=right):
                    table[left_pad + core + right_pad] = v
    else:
        for x in support:
            x = block(x)
            table[x] = f(x[dl : dl + w])
    return LocalRule(memory, anticipation, tuple(table.items()), f.domain_alphabet, f.codomain_alphabet)


def _chain(support: Iterable[Block], width: int, length: int) -> list:
    """Blocks of ``length`` all of whose ``width``-windows lie in ``support``."""
    support = sorted(set(support))
    if length <= width:
        return sorted({w[:length] for w in support})
    follow: dict = {}
    for w in support:
        follow.setdefault(w[:-1], []).append(w[-1])
    out = list(support)
    for _ in range(length - width):
        out = [x + (s,) for x in out for s in follow.get(x[len(x) - width + 1 :], ())]
    return out


def compose(outer: LocalRule, inner: LocalRule, support: Iterable | None = None) -> LocalRule:
    """The rule of ``outer`` after ``inner``.

    Memory and anticipation add up.  Without ``support`` the table covers
    every block whose inner windows lie in the inner support and whose inner
    image lies in the outer support.
    """
    missing = set(inner.codomain_alphabet) - set(outer.domain_alphabet)
    if missing:
        raise AlphabetError(f"inner codomain symbols {sorted(missing)} not in outer domain")
    m = inner.memory + outer.memory
    a = inner.anticipation + outer.anticipation
    W = m + 1 + a
    if support is None:
        candidates = _chain(inner.support.blocks, inner.width, W)
    else:
        candidates = [block(x) for x in support]
    table = {}
    for x in candidates:
        try:
            table[x] = apply_rule(outer, apply_rule(inner, x))[0]
        except SupportError:
            if support is not None:
                raise
    return LocalRule(m, a, tuple(table.items()), inner.domain_alphabet, outer.codomain_alphabet)


def rule_power(f: LocalRule, n: int) -> LocalRule:
    if n < 1:
        raise RangeError("rule power must be >= 1")
    if not set(f.codomain_alphabet) <= set(f.domain_alphabet):
        raise AlphabetError("rule power needs codomain within domain")
    g = f
    for _ in range(n - 1):
        g = compose(f, g)
    return g


def shift_normalize(f: LocalRule) -> tuple[LocalRule, int]:
    """Return the memory-0 rule of sigma^m o F together with the exponent m."""
    if f.memory == 0:
        return f, 0
    g = LocalRule(0, f.memory + f.anticipation, f.table, f.domain_alphabet, f.codomain_alphabet)
    return g, f.memory


def _require_memory_zero(f: LocalRule) -> None:
    if f.memory != 0:
        raise RangeError("rule must have memory 0; call shift_normalize first")


def image_language(f: LocalRule, source: Substitution, n: int) -> Language:
    """The n-blocks of F(X_source)."""
    _require_memory_zero(f)
    return Language(n, tuple(apply_rule(f, b) for b in language(source, n + f.anticipation)))


def _inverse_candidates(w: int):
    pairs = [(m, w - 1 - m) for m in range(w)]
    if w % 2:
        sym = (w // 2, w // 2)
        pairs.remove(sym)
        pairs.insert(0, sym)
    return pairs


def find_inverse_rule(f: LocalRule, source: Substitution, max_window: int) -> LocalRule | None:
    """Smallest local rule ``g`` with ``g(F(x))[i] == x[i]`` on X_source.

    Widths 1..max_window are searched; for each width the symmetric window
    comes first, then the others by increasing memory.  ``None`` means no
    inverse of width <= max_window, which does not prove non-injectivity.
    """
    _require_memory_zero(f)
    for w in range(1, max_window + 1):
        for mg, ag in _inverse_candidates(w):
            table: dict = {}
            ok = True
            for x in language(source, w + f.anticipation):
                y = apply_rule(f, x)
                target = x[mg]
                if table.setdefault(y, target) != target:
                    ok = False
                    break
            if ok:
                return LocalRule(mg, ag, tuple(table.items()), f.codomain_alphabet, source.alphabet)
    return None


def parse_rule(text: str) -> LocalRule:
    """Read the rule file format: a ``memory M anticipation A`` header line,
    then ``B1 B2 ... Bw -> S`` per table entry.  ``#`` lines are comments."""
    header = None
    table: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "memory" or parts[2] != "anticipation":
                raise FormatError(f"line {lineno}: expected 'memory M anticipation A'")
            try:
                header = (int(parts[1]), int(parts[3]))
            except ValueError:
                raise FormatError(f"line {lineno}: memory/anticipation must be integers") from None
            continue
        if "->" not in line:
            raise FormatError(f"line {lineno}: expected 'B1 ... Bw -> S'")
        lhs, rhs = line.split("->", 1)
        key, val = tuple(lhs.split()), rhs.split()
        if len(val) != 1:
            raise FormatError(f"line {lineno}: right-hand side must be one symbol")
        if len(key) != header[0] + 1 + header[1]:
            raise FormatError(f"line {lineno}: window length {len(key)} != {header[0] + 1 + header[1]}")
        if key in table:
            raise FormatError(f"line {lineno}: duplicate window")
        table[key] = val[0]
    if header is None:
        raise FormatError("missing 'memory M anticipation A' header")
    return LocalRule(header[0], header[1], tuple(table.items()))


def format_rule(f: LocalRule) -> str:
    lines = [f"memory {f.memory} anticipation {f.anticipation}"]
    lines += [f"{' '.join(k)} -> {v}" for k, v in f.table]
    return "\n".join(lines) + "\n"


def rule_from_mapping(table: Mapping, memory: int = 0, anticipation: int | None = None) -> LocalRule:
    """Convenience constructor: ``rule_from_mapping({"00": "a", ...})``."""
    items = [(block(k), v) for k, v in table.items()]
    if anticipation is None:
        anticipation = len(items[0][0]) - 1 - memory
    return LocalRule(memory, anticipation, tuple(items))
