"""Pushing words to fixed points of the seven maps and reading off their shape."""
from collections import Counter

from sqrt2patterns.transforms import classify_normal_form, reduce_to_normal_form
from sqrt2patterns.verify import fixed_points
from sqrt2patterns.words import BinaryWord, count_patterns

w = BinaryWord("0001000100")
normal, trace = reduce_to_normal_form(w)
for step in trace:
    print(f"phi{step.k}: {step.before} -> {step.after}")
print("zeros", w.bits.count("0"), "->", normal.bits.count("0"),
      "| patterns", count_patterns(w), "->", count_patterns(normal))
print(classify_normal_form(normal))

shapes = Counter(classify_normal_form(u).type_tag for n in range(1, 15) for u in fixed_points(n))
print("fixed points up to length 14 by shape:", dict(sorted(shapes.items())))
