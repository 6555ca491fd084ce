"""
Certifying a conjugacy
======================

A sliding block code f from X_theta onto its image Y is a conjugacy when
some exponent N makes the images f(theta^N(stu)) distinguish middle letters.
The certificate lists N, the code B of blocks f(theta^N(st)) and the
2-block rule g, and checks unique decomposition of Y into B-blocks.
"""

from subconj import (
    MORSE,
    build_certificate,
    build_theorem2_certificate,
    constant_rule,
    find_inverse_rule,
    identity_rule,
    k_block_rule,
    power,
)

# identity on the square of Thue-Morse: N = 1 already works
cert = build_certificate(power(MORSE, 2), identity_rule("01"))
print(cert.to_json())

# recoding by 3-blocks: the inverse is the projection to the first letter
f = k_block_rule(MORSE, 3)
cert = build_certificate(MORSE, f)
print("N =", cert.N, "| condition (1):", cert.condition1.status)
g = find_inverse_rule(f, MORSE, 3)
print("inverse rule:", dict(g.table))

# a constant map is never injective
print(build_certificate(MORSE, constant_rule("01"), N_max=5).to_json())

# letter-block form: B = {f(theta^N(s))}, separated by a-blocks
cert = build_theorem2_certificate(power(MORSE, 2), k_block_rule(MORSE, 2))
print("B  =", dict(cert.B))
print("B' =", cert.Bprime)
