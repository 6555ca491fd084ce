"""
Six letters for Thue-Morse
==========================

The 3-block presentation of Thue-Morse is a one-to-one primitive
substitution on the six 3-blocks of the system.  It generates a conjugate
system, so its alphabet meets the 3-block bound exactly.  For the Toeplitz
substitution the bound is five.
"""

from subconj import MORSE, TOEPLITZ, check_symbol_bound, count_3blocks, k_block_presentation
from subconj.substitution import format_substitution

spec = k_block_presentation(MORSE, 3)
print(format_substitution(spec.presented))

print("3-blocks of Thue-Morse:", count_3blocks(MORSE))
print("3-blocks of Toeplitz  :", count_3blocks(TOEPLITZ))
print(check_symbol_bound(MORSE, spec.presented))

# 2-block presentation: four letters
print(format_substitution(k_block_presentation(MORSE, 2).presented))
