"""Walk through the quintic threefold: from bundles on M11 x P^1 to 1/12."""

from redgw import bundles as bc
from redgw.comparison import ComparisonInput, build_PR_ring, compare, euler_class, twisted_bundle

inp = ComparisonInput(n=4, degrees=(5,), d=1)
data = build_PR_ring(inp)

print("Base ring:", data.base)
print("Hodge bundle H:", data.hodge.total_chern)
print("Normal part N:", data.normal.total_chern)
for L in data.L:
    print(f"{L.name}: c = {L.total_chern},  s = {bc.total_segre(L)}")

s = bc.total_segre(data.A)
print("\ns_1(A_R) =", s.component(1))
print("s_2(A_R) =", s.component(2))

print("\nOn the projective completion", data.ring)
print("c(H^v (x) N) =", twisted_bundle(data).total_chern)
e = euler_class(data)
print("e(E(-D)) =", e)
pushed = data.proj.push(e)
print("pushforward =", pushed, " degree =", pushed.degree())

report = compare(inp)
print()
print(report.to_text())

# any degree gives the same coefficient since c_1(T_Q) = 0
for d in range(1, 7):
    print(f"d = {d}: coefficient {compare(ComparisonInput(4, (5,), d)).coefficient}")
