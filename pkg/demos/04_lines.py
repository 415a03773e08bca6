"""Counting lines with Schubert calculus on G(2, n+1)."""

from redgw.lines import catalan, line_count, line_count_roots, sigma1_power_degree

for n, degrees in [(3, [3]), (4, [5]), (4, [2, 2]), (5, [3, 3]), (5, [2, 4]), (6, [2, 2, 3])]:
    print(f"degrees {degrees} in P^{n}: {line_count(n, degrees)} lines "
          f"(Chern roots give {line_count_roots(n, degrees)})")

print("\nDegree of G(2, n+1) in the Pluecker embedding is a Catalan number:")
for n in range(2, 8):
    print(f"  n = {n}: {sigma1_power_degree(n)} = C_{n - 1} = {catalan(n - 1)}")
