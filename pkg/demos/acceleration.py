"""Why z = 1 needs acceleration.

2F1(1/2, 1/2; 3/2; 1) = pi/2, but its terms decay like k^(-3/2), so the
partial sums gain about one digit per hundredfold increase in length.
Levin's u transform and Wynn's epsilon algorithm extrapolate the same
partial sums much further.

    python demos/acceleration.py
"""
from fractions import Fraction as F

from hypersum import SeriesSpec, pfq_eval
from hypersum.errors import BudgetExceededError
from hypersum.numeric.bigfloat import bf_pi
from hypersum.numeric.series import partial_sums

PREC = 384
h = F(1, 2)
spec = SeriesSpec([h, h], [3 * h], 1)
target = bf_pi(PREC) / 2

sums = partial_sums(spec, 4097, PREC)
print("plain partial sums")
for n in (16, 256, 4096):
    print(f"  n={n:5d}  error {abs(sums[n] - target).to_decimal(3)}")

lev = pfq_eval(spec, PREC, accel="levin_u")
print(f"\nlevin u     error {abs(lev.estimate - target).to_decimal(3)}"
      f"  estimate {lev.error_bound.to_decimal(3)}  ({lev.detail})")

try:
    wyn = pfq_eval(spec, PREC, accel="wynn_epsilon")
except BudgetExceededError as exc:
    # epsilon stalls long before 384 bits on logarithmic convergence
    wyn = exc.best
print(f"wynn eps    error {abs(wyn.estimate - target).to_decimal(3)}"
      f"  estimate {wyn.error_bound.to_decimal(3)}  ({wyn.detail})")
