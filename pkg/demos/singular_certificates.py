# Singular polynomials on the boundary of the positivity region.
#
# The pair is built symbolically, then q = t^e is substituted in every
# coefficient of M D_i.  Each residual is a sum of squares, so it is zero
# exactly when all coefficients vanish on the curve.
import vvmacdonald as vm
from vvmacdonald.singular import factor_check, generic_nonsingular, norm_vanishes

for tau in [(2, 1), (2, 2), (3, 1), (2, 1, 1)]:
    for family in ("S1", "S0"):
        c = vm.certify(tau, family)
        print(f"{str(tau):10s} {family}: alpha={c.alpha} q=t^{c.exponent:<3d}"
              f" valid={c.valid} generic_nonzero={generic_nonsingular(tau, family)}"
              f" norm_zero={norm_vanishes(tau, family)} factor={factor_check(tau, family)}")

print()
print(vm.certify_singular_S1((2, 1)).to_json())
