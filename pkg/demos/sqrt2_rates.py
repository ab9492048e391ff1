"""Zero and pattern rates along the binary expansion of sqrt(2)."""
import numpy as np

from sqrt2patterns.sqrt2 import sqrt2_fraction_bits
from sqrt2patterns.words import prefix_series

N = 10**6
bits = sqrt2_fraction_bits(N).bits
print("first 40 bits:", bits[:40])

points = np.unique(np.logspace(2, 6, 9).astype(int))
for e in prefix_series(bits, points.tolist()):
    print(f"n={e.n:>8}  zeros {float(e.z_rate):.5f}  patterns {float(e.p_rate):.5f}")

# a uniformly random word puts 11/32 of its positions in P
print("11/32 =", 11 / 32)
