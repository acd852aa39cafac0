"""Rational points on quartics turned into integer solutions.

Run: python3 demos/02_pipelines.py
"""

from sixdiff import default_config, run_pipeline

for pid, m in (("n2-m3", 2), ("n3-m2", 4), ("n4-m2", 2), ("n4-m1", 1)):
    run = run_pipeline(default_config(pid, m))
    print(f"== {pid}")
    for k, point, s in run.emitted:
        digits = max(len(str(abs(v))) for v in s.as_tuple())
        if digits <= 30:
            print(f"  m={k}: {s.as_tuple()}")
        else:
            print(f"  m={k}: n={s.n}, up to {digits} digits, X={s.X}")
    for k, why in run.skipped:
        print(f"  m={k} skipped: {why}")
