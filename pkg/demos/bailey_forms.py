"""Two ways of writing Bailey's sum, and which one the series agrees with.

2F1(a, 1-a; c; 1/2) equals Gamma(c/2) Gamma((c+1)/2) divided by
Gamma((a+c)/2) Gamma((c-a+1)/2).  A variant with Gamma(1/2) in place of
Gamma(c/2) in the numerator circulates as well; at a = 1/2, c = 3/2 it
gives sqrt(pi) Gamma(5/4), far from the series value sqrt2*pi/4.

    python demos/bailey_forms.py
"""
from fractions import Fraction as F

from hypersum import bailey, bailey_ext, pfq_eval
from hypersum.closed_forms import bailey_half_gamma_variant, theorem_series
from hypersum.numeric.bigfloat import ev_to_numeric

h = F(1, 2)
series = pfq_eval(theorem_series("bailey", a=h, c=3 * h), 256).estimate
exact = bailey(h, 3 * h)
print("series  ", series.to_decimal(30))
print("standard", ev_to_numeric(exact, 256).to_decimal(30), " =", exact)
print("variant ", bailey_half_gamma_variant(h, 3 * h, 256).to_decimal(30))

# the extended theorem at d = c lands on the standard form
for a, c in [(h, 3 * h), (F(3, 2), F(5, 2)), (F(5, 2), F(11, 2))]:
    print(f"bailey_ext({a}, {c}, d={c}) == bailey({a}, {c}):", bailey_ext(a, c, c) == bailey(a, c))
