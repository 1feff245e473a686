"""
Quantum K-theory: metric and table checks
=========================================

Two-point invariants are 0/1 thresholds at the distance, which pins down the
quantum K-metric.  A structure-constant table can then be tested against the
Euler characteristic identity and its corollaries.
"""

from schubdist import (
    Degree, KClass, bundled_table, gw_two_point, metric, metric_truncated, parse_table,
    product, run_checks, weyl_group,
)

W = weyl_group("A2")
w0, e = W.longest_element(), W.identity
print("((O^w0, O_e)) =", metric(W, w0, e, ()))
print("truncated at (2,2):")
print(metric_truncated(W, w0, e, (), Degree((1, 2), (2, 2))))
print("<O^w0, O_e>_(1,0) =", gw_two_point(W, w0, e, (), Degree((1, 2), (1, 0))))

# The bundled table for P^1 passes every check.
p1 = bundled_table("p1")
pt = KClass.opposite(p1.group, p1.parabolic, p1.group.s(1))
print("\nO^{1} * O^{1} =", {str(d): str(k) for d, k in product(p1, pt, pt).items()})
for line in run_checks(p1).summary():
    print(line)

# Changing the degree of the quantum term breaks the Euler identity.
broken = parse_table(p1.to_text().replace("1 | 1 | e | 1 | 1", "1 | 1 | e | 2 | 1"))
print("\nwith O^{1} * O^{1} = q^2 O^e:")
for line in run_checks(broken, "euler").summary():
    print(line)
