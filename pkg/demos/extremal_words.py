"""Words sitting on either end of (5r - 2)/3 <= pattern rate <= r."""
from fractions import Fraction

from sqrt2patterns.constructions import LowerBoundParams, construction_word, target_rates
from sqrt2patterns.words import prefix_series

print(LowerBoundParams.from_rate("3/5"))
print("lower, r=3/5:", construction_word("lower", "3/5", 60))
print("upper, r=1/2:", construction_word("upper", "1/2", 60))

n = 10**5
for bound in ("lower", "upper"):
    for r in (Fraction(1, 2), Fraction(4, 5)):
        w = construction_word(bound, r, n)
        tz, tp = target_rates(bound, r)
        for e in prefix_series(w, [n // 100, n // 10, n]):
            print(f"{bound:>5} r={r}  n={e.n:>6}  z {float(e.z_rate):.4f}/{float(tz):.4f}"
                  f"  p {float(e.p_rate):.4f}/{float(tp):.4f}")
