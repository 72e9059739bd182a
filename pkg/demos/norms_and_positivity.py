# Squared norms and the region where the form is positive definite.
from fractions import Fraction

import vvmacdonald as vm
from vvmacdonald.bilinear_form import norm_table

tau = (2, 1)
h = vm.max_hook(tau)
print("shape", tau, "maximal hook", h)

S0, S1 = vm.extremal_tableaux(tau)
for alpha in [(0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 1, 0)]:
    print(alpha, "||M||^2 =", vm.norm(alpha, S0))

# Inside the region every norm is positive; strictly between t^-h and t^h
# some norm with |alpha| <= h is not.
t0 = Fraction(3, 2)
for q0 in (Fraction(1, 10), Fraction(2), Fraction(5)):
    region = vm.positivity_classify(q0, t0, tau)
    vals = [v for *_, v in norm_table(3, tau, h, point=(q0, t0))]
    print(f"q={q0}, t={t0}: {region:8s} min norm {min(vals)}")

print("q = t^3 at t = 3/2:", vm.positivity_classify(t0 ** 3, t0, tau))

# boundary lines in log coordinates, ready for any plotting tool
csv = vm.region_boundary_csv(4, samples=5)
print(csv)
