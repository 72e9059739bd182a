# Building vector-valued Macdonald polynomials on the Yang-Baxter graph.
#
# Each node is a pair (alpha, S): a composition and a reverse standard
# Young tableau.  The builder walks from the root 1 (x) S0 using three
# kinds of steps and memoizes every node it touches.

import vvmacdonald as vm
from vvmacdonald.tableaux import extremal_tableaux

tau = (2, 1)
S0, S1 = extremal_tableaux(tau)
print("S0 =", S0, " contents", S0.contents)
print("S1 =", S1, " contents", S1.contents)

b = vm.YangBaxterBuilder(3, tau)
node = b.build((0, 1, 0), S1)
print("\nM[(0,1,0); S1] =", node.M)
print("spectral vector:", [str(z) for z in node.zeta_scalars])
print("path from the root:", " -> ".join(node.path))

# the eigenvalue equations hold exactly in Q(q,t)
print("eigencheck:", b.check_eigen(node))
print("leading term and triangularity:", b.check_leading(node))

# a different route through the graph gives the same polynomial
alt = vm.YangBaxterBuilder(3, tau, strategy="descents-first").build((0, 1, 0), S1)
print("path independent:", alt.M == node.M)

# evaluate at a rational point; (1/10, 3/2) avoids every step denominator
from fractions import Fraction

q0, t0 = Fraction(1, 10), Fraction(3, 2)
for e, v in node.M.sorted_terms():
    print(e, {k: str(vm.eval_point(c, q0, t0)) for k, c in v.items()})

print("\nmemo store holds", len(b.store), "nodes")
