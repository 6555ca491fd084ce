"""Brute-force reference computations, kept independent of the package."""

import itertools


def expand(rules, word, times):
    """Iterate a single-character substitution on a string."""
    for _ in range(times):
        word = "".join(rules[ch] for ch in word)
    return word


def scanned_language(rules, n, times):
    """n-blocks seen in rules^times(a) for every letter a."""
    out = set()
    for a in rules:
        w = expand(rules, a, times)
        out.update(w[i : i + n] for i in range(len(w) - n + 1))
    return sorted(out)


def primitive_by_search(rules):
    """Does every letter occur in rules^n(t) for every t, for some n up to Wielandt?"""
    k = len(rules)
    for n in range(1, (k - 1) ** 2 + 2):
        if all(set(expand(rules, t, n)) >= set(rules) for t in rules):
            return True
    return False


def all_segmentations(code, word):
    """Every way to cover ``word`` by code words, allowing a leading and a
    trailing fragment shorter than the longest code word.  Returns the set
    of cut tuples (start offsets of the code words used)."""
    longest = max(len(c) for c in code)
    found = set()

    def walk(pos, cuts):
        if len(word) - pos < longest:
            found.add(tuple(cuts))
        for c in code:
            if word.startswith(c, pos):
                walk(pos + len(c), cuts + [pos])

    for start in range(min(longest, len(word) + 1)):
        walk(start, [])
    return {cuts for cuts in found if cuts}


def parity(bits):
    return str(sum(int(b) for b in bits) % 2)


def all_words(alphabet, n):
    return ["".join(p) for p in itertools.product(alphabet, repeat=n)]
