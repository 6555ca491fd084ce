"""k-block presentations and the 3-block bound on alphabet size.

The k-block presentation of ``theta`` is a substitution on the k-blocks of
X_theta.  A k-block ``w`` stands for its letter at offset ``m = k // 2``;
its image lists the k-blocks of ``theta(w)`` that begin at offsets
``m*L - m + j`` for ``j = 0..L-1``, i.e. one k-block for each position of
``theta(w[m])`` with the same relative alignment.  For the Morse
substitution and k = 3 this gives ``stu -> (s2 t1 t2)(t1 t2 u1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blockcode import LocalRule
from .core import HypothesisError, WellDefinednessError, join_symbol
from .substitution import (
    Substitution,
    apply,
    is_infinite,
    is_one_to_one,
    is_primitive,
    language,
)


@dataclass(frozen=True)
class PresentationSpec:
    base: Substitution
    k: int
    presented: Substitution
    correspondence: tuple  # ((k-block, symbol), ...)
    note: str = ""


def _image_at(theta: Substitution, ctx: tuple, i: int, k: int) -> tuple:
    """Image of the k-block ``ctx[i:i+k]`` read off ``theta(ctx)``."""
    L = theta.L
    m = k // 2
    t = apply(theta, ctx)
    start = i * L + m * L - m
    return tuple(join_symbol(t[start + j : start + j + k]) for j in range(L))


def k_block_presentation(base: Substitution, k: int) -> PresentationSpec:
    if k < 1:
        raise ValueError("k must be >= 1")
    verdict = is_infinite(base)
    if verdict.kind == "finite":
        raise HypothesisError(f"k-block presentations need an infinite system, got {verdict}")
    if k == 1:
        return PresentationSpec(base, 1, base, tuple(((s,), s) for s in base.alphabet))
    blocks = language(base, k).blocks
    images = {w: _image_at(base, w, 0, k) for w in blocks}
    # every occurrence of w inside a longer block must induce the same image
    span = k + 2
    for ctx in language(base, span):
        for i in range(span - k + 1):
            w = ctx[i : i + k]
            if _image_at(base, ctx, i, k) != images[w]:
                raise WellDefinednessError(f"image of {join_symbol(w)!r} depends on its context")
    alphabet = tuple(join_symbol(w) for w in blocks)
    presented = Substitution(alphabet, tuple(images[w] for w in blocks))
    note = "beyond the worked 3-block example" if k > base.L + 1 else ""
    return PresentationSpec(base, k, presented, tuple((w, join_symbol(w)) for w in blocks), note)


def k_block_rule(base: Substitution, k: int) -> LocalRule:
    """The memory-0 sliding block code x[i..i+k-1] -> symbol of that k-block."""
    table = tuple((w, join_symbol(w)) for w in language(base, k))
    return LocalRule(0, k - 1, table, domain_alphabet=base.alphabet)


def count_3blocks(theta: Substitution) -> int:
    verdict = is_infinite(theta)
    if verdict.kind == "finite":
        raise HypothesisError(f"the 3-block bound concerns infinite systems, got {verdict}")
    return len(language(theta, 3))


@dataclass(frozen=True)
class BoundReport:
    bound: int
    zeta_size: int
    satisfied: bool
    attained: bool

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "zeta_size": self.zeta_size,
            "satisfied": self.satisfied,
            "attained": self.attained,
        }


def check_symbol_bound(theta: Substitution, zeta: Substitution) -> BoundReport:
    """Compare the alphabet size of ``zeta`` with the number of 3-blocks of X_theta."""
    if not is_primitive(zeta):
        raise HypothesisError("zeta must be primitive")
    if not is_one_to_one(zeta):
        raise HypothesisError("zeta must be one-to-one")
    if theta.L != zeta.L:
        raise HypothesisError(
            f"lengths differ ({theta.L} vs {zeta.L}); reducing to equal lengths is not supported"
        )
    bound = count_3blocks(theta)
    size = len(zeta.alphabet)
    return BoundReport(bound, size, size <= bound, size == bound)
