"""
Cutting a word into substitution blocks
=======================================

Points of an infinite primitive substitution system split into image
blocks in exactly one way.  We parse finite windows phase by phase.
"""

from subconj import BlockCode, MORSE, apply, parse_window, power, recognizability_window

code = BlockCode.images(MORSE)
word = apply(power(MORSE, 4), "0")
cert = parse_window(code, word)
print(cert.status, "phase", cert.phase, "cuts", cert.cut_positions)

# The periodic system of 0->010, 1->101 is the counterexample:
# the word 0101010101 splits at two different phases.
cert = parse_window(BlockCode.of(["010", "101"]), "0101010101")
print(cert.status, cert.witness)

# How long must a window be before its phase is forced?
for n in (1, 2, 3):
    print(f"Thue-Morse^{n}: every block of length", recognizability_window(power(MORSE, n)), "has one phase")
