"""Walk through the five pi-formula families.

Each family turns a summation theorem into an infinite supply of series
whose sums are rational combinations of 1, pi, pi^2 (sometimes times
sqrt2).  For a few members we print the series, the exact right-hand side,
and the two sides evaluated independently to 40 digits.

    python demos/pi_families.py
"""
from fractions import Fraction as F

from hypersum import generate, pfq_eval
from hypersum.numeric.bigfloat import ev_to_numeric

PREC = 256

members = [
    ("gauss", dict(m=3)),
    ("gauss_ext", dict(m=1, d=F(2))),
    ("gauss_second_ext", dict(m=1, n=2, d=F(5, 3))),
    ("bailey_ext", dict(m=2, n=1, d=F(9, 2))),
    ("watson_ext", dict(m=1, n=0, s=2, d=F(7))),
]

for name, params in members:
    ident = generate(name, **params)
    lhs = ident.lhs.normalized()
    numeric = pfq_eval(lhs, PREC)
    exact = ev_to_numeric(ident.rhs, PREC)
    print(ident.source)
    print(f"  {lhs}")
    print(f"  = {ident.rhs}")
    print(f"  series  {numeric.estimate.to_decimal(40)}  ({numeric.method}, {numeric.terms_used} terms)")
    print(f"  closed  {exact.to_decimal(40)}")
    print(f"  |diff|  {abs(numeric.estimate - exact).to_decimal(3)}")
    print()

# Setting d equal to a lower parameter cancels the (d+1; d) pair and the
# extension collapses to the classical sum.
a = generate("gauss_ext", m=2, d=F(7, 2))
b = generate("gauss", m=2)
print("d = 3/2 + m collapses T2.2 onto T2.1:", a.lhs.normalized() == b.lhs, a.rhs == b.rhs)
