"""Which strata can contribute: a dimension count for threefolds and surfaces."""

from redgw.audit import vanishing_verdicts

for n, degrees, label in [(4, [5], "quintic threefold"), (3, [4], "quartic K3 surface")]:
    for d, k in [(2, 0), (2, 2)]:
        rep = vanishing_verdicts(n, degrees, d, k)
        print(f"{label}, d = {d}, k = {k}: threshold {rep.dim_B}")
        for v in rep.verdicts:
            print(f"   {str(v.stratum):<28} dim {v.dim_X:>3}  {v.verdict}")
        survivors = rep.survivors()
        print("   survivors:", ", ".join(map(str, survivors)) if survivors else "none")
        print()
