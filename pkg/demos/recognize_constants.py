"""Recover exact closed forms from decimals.

A 200-digit decimal is matched against 1, pi, pi^2, sqrt2, sqrt2*pi with
PSLQ.  Catalog values come back exactly; ln 2 has no small relation with
that basis and is rejected.

    python demos/recognize_constants.py
"""
import mpmath

from hypersum import catalog, recognize
from hypersum.numeric.bigfloat import BigFloat, ev_to_numeric

PREC = 665  # a little over 200 digits

for entry in catalog()[::7]:
    dec = ev_to_numeric(entry.expected, PREC + 32).to_decimal(200)
    found = recognize(BigFloat(dec, PREC), PREC)
    print(f"{entry.id:<18} {dec[:32]}...  ->  {found}")

with mpmath.workdps(210):
    ln2 = mpmath.nstr(mpmath.log(2), 200)
print(f"{'ln 2':<18} {ln2[:32]}...  ->  {recognize(BigFloat(ln2, PREC), PREC)}")
