"""Counting and listing growth diagrams, and cycling one under promotion.

A type word over {1, 2} fixes a sequence of fundamental weights.  The
growth diagrams of that type index a basis of the corresponding invariant
space, and an independent dynamic program over dominant weights gives the
dimension without building anything.
"""

from sl3webs import complete_from_row, dim_inv, enumerate_diagrams, promotion

for text in ("12", "1212", "121212", "11", "121212121212"):
    word = tuple(int(c) for c in text)
    print(f"type {text}: dimension {dim_inv(word)}")

print()
word = (1, 2, 1, 2, 1, 2)
diagrams = enumerate_diagrams(word)
print(f"the {len(diagrams)} diagrams of type 121212, by their first rows:")
for d in diagrams:
    print(" ", " ".join(str(tuple(p)) for p in d.first_row))

# Promotion rebuilds the diagram from its second row.  Applying it n times
# walks around the cylinder once and must return to the start.
print()
d = diagrams[3]
print("promotion orbit of diagram 3:")
cur = d
for step in range(1, len(word) + 1):
    cur = complete_from_row(promotion(cur.first_row))
    marker = "  <- back to the start" if cur == d else ""
    plural = "s" if step > 1 else ""
    print(f"  after {step} application{plural}{marker}")
    if cur == d and step < len(word):
        print("  (the orbit closed early; this diagram is symmetric)")
        break
