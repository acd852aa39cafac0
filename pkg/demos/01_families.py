"""Closed-form families for n = 2 and n = 3.

Run: python3 demos/01_families.py
"""

from sixdiff import enumerate_family, n2_factor_family, n2_method2, n3_method1, normal_form, verify

# a^6 - b^6 splits into four factors; each subset of them gives a family in t
for mask in (0b1010, 0b1100, 0b1011, 0b1111):
    s = n2_factor_family(2, 1, 1, mask)
    print(f"split {mask:04b}: {s.as_tuple()}  ok={verify(2, *s.as_tuple())}")

print("method 2, (a, b, p) = (2, 1, 2):", n2_method2(2, 1, 2).as_tuple())
print("n = 3, (a, b) = (2, 1):", n3_method1(2, 1).as_tuple())

# many raw tuples collapse to one primitive form
raw = enumerate_family("n2-case1", {"a": 2, "b": 1, "t": (1, 6)})
for s in raw:
    print(s.as_tuple(), "->", normal_form(s).as_tuple())
