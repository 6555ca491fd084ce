"""Check a proposed conjugacy from a substitution system to its image.

Given a primitive one-to-one constant-length ``theta`` and a memory-0 local
rule ``f``, the image ``Y = F(X_theta)`` is conjugate to ``X_theta`` exactly
when some exponent ``N`` separates middle letters: for 3-blocks ``stu`` and
``s't'u'`` with ``t != t'`` the images ``f(theta^N(stu))`` differ.  The
builders here search for that ``N``, assemble the code
``B = {f(theta^N(st))}`` and the 2-block rule ``g = f o theta^N`` and check
the three decomposition conditions on languages up to a chosen depth.

The interior-disagreement variant works with letter images
``f(theta^N(s))`` of length ``L^N - a`` separated by ``a``-blocks.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .blockcode import LocalRule, apply_rule, image_language, shift_normalize
from .core import AlphabetError, HypothesisError, RangeError, show
from .recognizability import BlockCode, ParseVerdict, surviving_phases, unique_concatenation
from .substitution import (
    Substitution,
    describe,
    is_infinite,
    is_one_to_one,
    is_primitive,
    language,
    power,
)

MIRRORING_NOTE = (
    "mirroring checked as: letters s <-> f(theta^N(s)) form a bijection and every "
    "induced letter block lies in the language of theta up to the checked depth"
)


def _check_hypotheses(theta: Substitution, f: LocalRule) -> None:
    if not is_primitive(theta):
        raise HypothesisError("theta must be primitive")
    if not is_one_to_one(theta):
        raise HypothesisError("theta must be one-to-one (distinct symbols need distinct images)")
    verdict = is_infinite(theta)
    if verdict.kind != "infinite":
        raise HypothesisError(f"the system of theta must be infinite, got {verdict}")
    extra = set(f.domain_alphabet) - set(theta.alphabet)
    if extra:
        raise AlphabetError(f"rule reads symbols {sorted(extra)} outside theta's alphabet")


def _require_memory_zero(f: LocalRule) -> None:
    if f.memory != 0:
        raise RangeError("rule must have memory 0; call shift_normalize first")


def _padded_image(thetaN: Substitution, f: LocalRule, w: tuple) -> tuple:
    """f widened to anticipation exactly L^N, applied to theta^N(w).

    Widening only appends ignored variables, so this is f applied to
    theta^N(w) cut to (len(w) - 1) * L^N symbols.
    """
    c = thetaN.L
    if c <= f.anticipation:
        raise RangeError(f"L^N = {c} must exceed the anticipation {f.anticipation}")
    return apply_rule(f, thetaN(w))[: (len(w) - 1) * c]


def _first_difference(u, v) -> int | None:
    for i, (a, b) in enumerate(zip(u, v)):
        if a != b:
            return i
    return None if len(u) == len(v) else min(len(u), len(v))


def _middle_distinct_pairs(theta: Substitution):
    blocks = language(theta, 3).blocks
    for p, q in itertools.combinations(blocks, 2):
        if p[1] != q[1]:
            yield p, q


@dataclass(frozen=True)
class StarCheck:
    """Outcome of a middle-letter separation test at exponent ``N``.

    ``evidence`` lists ``(block, block, index)`` with the first index where
    the two images differ; ``witness`` is the least colliding pair.
    """

    passed: bool
    N: int
    evidence: tuple = ()
    witness: tuple | None = None

    def to_dict(self) -> dict:
        d = {
            "passed": self.passed,
            "N": self.N,
            "evidence": [[show(p), show(q), i] for p, q, i in self.evidence],
        }
        if self.witness is not None:
            d["witness"] = [show(b) for b in self.witness]
        return d


def check_star(theta: Substitution, f: LocalRule, N: int) -> StarCheck:
    _require_memory_zero(f)
    if not is_one_to_one(theta):
        raise HypothesisError("theta must be one-to-one (distinct symbols need distinct images)")
    thetaN = power(theta, N)
    images = {w: _padded_image(thetaN, f, w) for w in language(theta, 3)}
    evidence = []
    for p, q in _middle_distinct_pairs(theta):
        i = _first_difference(images[p], images[q])
        if i is None:
            return StarCheck(False, N, tuple(evidence), (p, q))
        evidence.append((p, q, i))
    return StarCheck(True, N, tuple(evidence))


def find_N(theta: Substitution, f: LocalRule, N_max: int = 8) -> int | None:
    _require_memory_zero(f)
    for N in range(1, N_max + 1):
        if theta.L**N <= f.anticipation:
            continue
        if check_star(theta, f, N).passed:
            return N
    return None


@dataclass(frozen=True)
class CertificateFailure:
    """The first condition that failed, with a concrete witness."""

    condition: str
    reason: str
    witness: object = None
    bounds: dict = field(default_factory=dict)

    ok = False

    def to_dict(self) -> dict:
        return {
            "ok": False,
            "failed_condition": self.condition,
            "reason": self.reason,
            "witness": self.witness,
            "bounds": self.bounds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class ConjugacyCertificate:
    theta: Substitution
    f: LocalRule
    shift: int
    N: int
    B: BlockCode
    g_table: tuple  # ((st, block), ...) sorted by st
    condition1: ParseVerdict
    condition2: bool
    condition3: bool
    condition3_witness: tuple | None
    star: StarCheck
    depth: int
    N_max: int

    ok = True

    @property
    def g(self) -> dict:
        return dict(self.g_table)

    def to_dict(self) -> dict:
        return {
            "ok": True,
            "theta": describe(self.theta),
            "f": {
                "memory": self.f.memory,
                "anticipation": self.f.anticipation,
                "shift": self.shift,
                "table": {show(k): v for k, v in self.f.table},
            },
            "N": self.N,
            "B": [show(b) for b in self.B.blocks],
            "g_table": {show(k): show(v) for k, v in self.g_table},
            "condition1": self.condition1.to_dict(),
            "condition2": self.condition2,
            "condition3": {
                "passed": self.condition3,
                "witness": None
                if self.condition3_witness is None
                else [show(b) for b in self.condition3_witness],
            },
            "star_evidence": self.star.to_dict()["evidence"],
            "bounds": {"N_max": self.N_max, "depth": self.depth, "block_length": self.depth * self.B.c},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def build_certificate(
    theta: Substitution, f: LocalRule, N_max: int = 8, depth: int = 4
) -> ConjugacyCertificate | CertificateFailure:
    """Search for N, build B and g = f o theta^N and check conditions (1)-(3).

    ``f`` is shift-normalised first; the certificate records the exponent of
    the shift that was absorbed.  Language-level checks use blocks of length
    ``depth * L^N``.
    """
    _check_hypotheses(theta, f)
    f0, shift = shift_normalize(f)
    bounds = {"N_max": N_max, "depth": depth}
    N = find_N(theta, f0, N_max)
    if N is None:
        last = max((n for n in range(1, N_max + 1) if theta.L**n > f0.anticipation), default=None)
        witness = None
        if last is not None:
            w = check_star(theta, f0, last).witness
            witness = {"N": last, "pair": [show(b) for b in w]}
        return CertificateFailure("star", f"no N <= {N_max} separates middle letters", witness, bounds)
    star = check_star(theta, f0, N)
    thetaN = power(theta, N)
    c = thetaN.L
    g = {st: _padded_image(thetaN, f0, st) for st in language(theta, 2)}
    code = BlockCode(tuple(g.values()))

    def y_lang(n):
        return image_language(f0, theta, n)

    cond1 = unique_concatenation(code, y_lang, depth)
    if not cond1.unique:
        return CertificateFailure(
            "condition1",
            f"Y-block decodes {cond1.status}ly against B",
            cond1.to_dict(),
            bounds,
        )

    # (2): G(x) is a point of Y with B-blocks at multiples of L^N
    cond2 = True
    y3 = image_language(f0, theta, 2 * c).as_set()
    for stu in language(theta, 3):
        y = g[stu[:2]] + g[stu[1:]]
        if y not in y3 or 0 not in surviving_phases(code, y):
            return CertificateFailure(
                "condition2", "g(st)g(tu) is not a phase-0 block of Y", show(stu), bounds
            )

    cond3_witness = None
    for p, q in _middle_distinct_pairs(theta):
        if g[p[:2]] + g[p[1:]] == g[q[:2]] + g[q[1:]]:
            cond3_witness = (p, q)
            break
    if cond3_witness is not None:
        return CertificateFailure(
            "condition3", "g does not separate middle letters", [show(b) for b in cond3_witness], bounds
        )
    return ConjugacyCertificate(
        theta=theta,
        f=f0,
        shift=shift,
        N=N,
        B=code,
        g_table=tuple(sorted(g.items())),
        condition1=cond1,
        condition2=cond2,
        condition3=True,
        condition3_witness=None,
        star=star,
        depth=depth,
        N_max=N_max,
    )


@dataclass(frozen=True)
class InteriorCheck:
    passed: bool
    evidence: tuple  # ((s, t, interior indices), ...)
    witness: tuple | None = None


def check_interior_disagreement(theta: Substitution) -> InteriorCheck:
    """Every two letter images differ somewhere other than the first or last entry."""
    L = theta.L
    if L < 3:
        raise HypothesisError(
            f"interior disagreement needs L >= 3 (got L = {L}); the condition is "
            "vacuous for L = 2, use power(theta, 2) instead"
        )
    evidence = []
    witness = None
    for (s, u), (t, v) in itertools.combinations(theta.items(), 2):
        idx = tuple(i for i in range(1, L - 1) if u[i] != v[i])
        evidence.append((s, t, idx))
        if not idx and witness is None:
            witness = (s, t)
    return InteriorCheck(witness is None, tuple(evidence), witness)


@dataclass(frozen=True)
class Star2Check:
    passed: bool
    N: int
    letter_images: tuple  # ((s, f(theta^N(s))), ...)
    collision: tuple | None = None


def check_star2(theta: Substitution, f: LocalRule, N: int) -> Star2Check:
    """Letter images f(theta^N(t)) are pairwise distinct."""
    _require_memory_zero(f)
    if not is_one_to_one(theta):
        raise HypothesisError("theta must be one-to-one (distinct symbols need distinct images)")
    interior = check_interior_disagreement(theta)
    if not interior.passed:
        raise HypothesisError(
            f"images of {interior.witness[0]!r} and {interior.witness[1]!r} agree away from the ends"
        )
    thetaN = power(theta, N)
    if thetaN.L <= f.anticipation:
        raise RangeError(f"L^N = {thetaN.L} must exceed the anticipation {f.anticipation}")
    images = tuple((s, apply_rule(f, im)) for s, im in thetaN.items())
    seen: dict = {}
    for s, im in images:
        if im in seen:
            return Star2Check(False, N, images, (seen[im], s))
        seen[im] = s
    return Star2Check(True, N, images)


@dataclass(frozen=True)
class Theorem2Certificate:
    theta: Substitution
    f: LocalRule
    shift: int
    N: int
    a: int
    B: tuple  # ((letter, block), ...) in alphabet order
    Bprime: tuple
    neighbor_map: tuple  # (((left, right), between), ...)
    condition1: ParseVerdict
    condition2: bool
    mirroring: bool
    mirroring_blocks_checked: int
    depth: int
    N_max: int
    note: str = MIRRORING_NOTE

    ok = True

    def to_dict(self) -> dict:
        return {
            "ok": True,
            "theta": describe(self.theta),
            "f": {
                "memory": self.f.memory,
                "anticipation": self.f.anticipation,
                "shift": self.shift,
                "table": {show(k): v for k, v in self.f.table},
            },
            "N": self.N,
            "a": self.a,
            "B": {s: show(b) for s, b in self.B},
            "Bprime": [show(b) for b in self.Bprime],
            "neighbor_map": [[show(l), show(r), show(m)] for (l, r), m in self.neighbor_map],
            "condition1": self.condition1.to_dict(),
            "condition2": self.condition2,
            "mirroring": {"passed": self.mirroring, "blocks_checked": self.mirroring_blocks_checked},
            "note": self.note,
            "bounds": {"N_max": self.N_max, "depth": self.depth},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def build_theorem2_certificate(
    theta: Substitution, f: LocalRule, N_max: int = 8, depth: int = 4
) -> Theorem2Certificate | CertificateFailure:
    """Certificate for the letter-block form of the conjugacy conditions.

    ``B`` holds the letter images ``f(theta^N(s))`` and ``Bprime`` the
    ``a``-blocks that sit between them in Y.  Everything about Y is read
    off its blocks of length ``depth * L^N``.
    """
    interior = check_interior_disagreement(theta)
    if not interior.passed:
        s, t = interior.witness
        raise HypothesisError(f"images of {s!r} and {t!r} agree away from the first and last entry")
    _check_hypotheses(theta, f)
    f0, shift = shift_normalize(f)
    a = f0.anticipation
    bounds = {"N_max": N_max, "depth": depth}
    N = None
    last = None
    for n in range(1, N_max + 1):
        if theta.L**n <= a:
            continue
        last = check_star2(theta, f0, n)
        if last.passed:
            N = n
            break
    if N is None:
        witness = None if last is None else {"N": last.N, "pair": list(last.collision)}
        return CertificateFailure("star2", f"no N <= {N_max} makes letter images distinct", witness, bounds)

    thetaN = power(theta, N)
    c = thetaN.L
    head = dict(check_star2(theta, f0, N).letter_images)
    letter_of = {b: s for s, b in head.items()}
    periods = {}
    for st in language(theta, 2):
        periods[st] = _padded_image(thetaN, f0, st)
    code = BlockCode(tuple(periods.values()))

    def y_lang(n):
        return image_language(f0, theta, n)

    cond1 = unique_concatenation(code, y_lang, depth)
    if not cond1.unique:
        return CertificateFailure(
            "condition1", f"Y-block decodes {cond1.status}ly into alternating blocks", cond1.to_dict(), bounds
        )

    # Read B, B' and the induced letter sequence off every long Y-block.
    neighbor: dict = {}
    Bprime = set()
    checked = 0
    n = depth * c
    for y in y_lang(n):
        (p,) = surviving_phases(code, y)
        starts = list(range(p, n - c + 1, c))
        letters = []
        for i in starts:
            h, tail = y[i : i + c - a], y[i + c - a : i + c]
            if h not in letter_of:
                return CertificateFailure("mirroring", "Y-block head is not a letter image", show(y), bounds)
            letters.append(letter_of[h])
            Bprime.add(tail)
            nxt = y[i + c : i + 2 * c - a]
            if len(nxt) == c - a:
                key = (h, nxt)
                if neighbor.setdefault(key, tail) != tail:
                    return CertificateFailure(
                        "condition2",
                        "between-block is not determined by its neighbours",
                        [show(h), show(nxt), show(neighbor[key]), show(tail)],
                        bounds,
                    )
        if tuple(letters) not in language(theta, len(letters)):
            return CertificateFailure(
                "mirroring", "induced letter block not in the language of theta", show(letters), bounds
            )
        checked += 1

    return Theorem2Certificate(
        theta=theta,
        f=f0,
        shift=shift,
        N=N,
        a=a,
        B=tuple((s, head[s]) for s in theta.alphabet),
        Bprime=tuple(sorted(Bprime)),
        neighbor_map=tuple(sorted(neighbor.items())),
        condition1=cond1,
        condition2=True,
        mirroring=True,
        mirroring_blocks_checked=checked,
        depth=depth,
        N_max=N_max,
    )
