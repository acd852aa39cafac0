"""Check every printed value in the registry and show what does not hold.

Run: python3 demos/03_claims.py
"""

from sixdiff import check_all, render_report

print(render_report(check_all()))
