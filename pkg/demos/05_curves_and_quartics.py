"""From a quartic with a rational point to an elliptic curve and back.

Run: python3 demos/05_curves_and_quartics.py
"""

from fractions import Fraction

from sixdiff import QuarticCurve, QuarticPoint, q_isomorphic, to_weierstrass
from sixdiff.curves import WeierstrassCurve

Q = QuarticCurve([576, 0, 477, 0, 36])  # v^2 = 36x^4 + 477x^2 + 576
seed = QuarticPoint(4, 132)
qmap = to_weierstrass(Q, seed, base=QuarticPoint(0, 24))
E = qmap.curve
print("quartic:", Q)
print("curve:  ", E, " j =", E.invariants().j)

P = qmap.forward(seed)
R = P
for m in range(1, 5):
    q = qmap.backward(R)
    print(f"{m}P -> quartic point ({q.x}, {q.v})")
    R = E.add(R, P)

# the printed n = 3 model is not this curve; the n = 4 one is, up to scaling
print("matches N^2 = M^3 + M^2 - 122M - 444:", q_isomorphic(E, WeierstrassCurve(1, -122, -444)))
Q42 = QuarticCurve([16128, 0, 0, 0, -63])
E42 = to_weierstrass(Q42, QuarticPoint(Fraction(452, 463), Fraction(27175680, 214369))).curve
print("n=4 scale factor to y^2 = x^3 + 196x:", q_isomorphic(E42, WeierstrassCurve(0, 196, 0)))
