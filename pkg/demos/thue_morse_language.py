"""
Blocks of the Thue-Morse system
===============================

Build the Thue-Morse substitution, look at its powers and count the
n-blocks that occur in the minimal system it generates.
"""

from subconj import MORSE, TOEPLITZ, apply, incidence, is_infinite, is_primitive, language, power, show

# The substitution 0 -> 01, 1 -> 10 extended to words by concatenation.
print("theta(01)    =", show(apply(MORSE, "01")))
print("theta^4(0)   =", show(power(MORSE, 4)["0"]))

# Primitivity is decided from the incidence matrix.
print("incidence:\n", incidence(MORSE))
print("primitive:", is_primitive(MORSE))

# Complexity function p(n) = number of n-blocks.
for theta, name in ((MORSE, "Thue-Morse"), (TOEPLITZ, "Toeplitz")):
    p = [len(language(theta, n)) for n in range(1, 13)]
    print(f"{name:10s} p(1..12) = {p}")

# Powers generate the same system, so they have the same blocks.
for m in (2, 3):
    same = all(language(MORSE, n) == language(power(MORSE, m), n) for n in range(1, 9))
    print(f"theta^{m} has the same blocks up to length 8: {same}")

# A complexity plateau means the system is a single periodic orbit.
from subconj import Substitution

periodic = Substitution.from_mapping({"0": "010", "1": "101"})
print("0->010, 1->101:", is_infinite(periodic))
print("Thue-Morse   :", is_infinite(MORSE, 16))
