"""Small exhaustive searches, and the primitive solutions they turn up.

Run: python3 demos/04_search.py   (set DIO_THREADS to use several processes)
"""

import time

from sixdiff import SearchSpec, brute_search

for n, xy, wz in ((2, 20, 10**4), (3, 30, 10**4), (4, 40, 10**5)):
    t = time.perf_counter()
    sols = brute_search(SearchSpec(n, xy, wz, primitive_only=True))
    took = time.perf_counter() - t
    print(f"n={n} X,Y <= {xy}, |W|,|Z| <= {wz}: {len(sols)} primitive solutions ({took:.2f} s)")
    for s in sols[:8]:
        print("   ", s.as_tuple())
