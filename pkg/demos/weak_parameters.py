"""Which bit widths n make the integer logistic generator collapse?

Once the state hits 2^(n-1), the next step gives 0 and the generator is stuck.
"""
from sqrt2patterns.logistic import (
    count_undesirable,
    is_undesirable_exact,
    iterate_states,
    sufficient_by_lemma2,
    sufficient_by_patterns,
)

# n = 13 is weak: the witness lands on 2^(n-1), then 2^n, then 0 forever
bad, x = is_undesirable_exact(13)
print("n=13 undesirable:", bad, "witness x =", x)
print("trace:", iterate_states(13, x, 3).states)

# the cheap pattern test misses n = 65, the sharper bit comparison does not
for n in (13, 65):
    print(n, "patterns", sufficient_by_patterns(n), "lemma2", sufficient_by_lemma2(n),
          "exact", is_undesirable_exact(n)[0])

for N in (100, 1000, 10000):
    d, rate = count_undesirable(N, "exact")
    print(f"N={N:>6}  d_N={d:>5}  d_N/N={float(rate):.4f}")
