"""How low can a graph-state threshold go?

No-cloning forces k > n/2.  A counting argument tightens this: every
threshold-k graph must route each k-coalition through a small parity
witness, and there are not enough small sets to go around unless
C(n,k) <= 2 * sum_{i <= 2(n-k+1)/3} C(n,i) * C(k-1, 2k-n-1).
Everything below is exact integer arithmetic.
"""

from graphqss import counting_inequality, min_feasible_k, pure_qss_feasibility

print("the inequality at small, hand-checkable points:")
for n, k in [(5, 3), (5, 4), (5, 5), (9, 5), (9, 6)]:
    r = counting_inequality(n, k)
    print(f"  n={n} k={k}: C(n,k)={r.lhs} vs {r.rhs} -> {'holds' if r.holds else 'violated'}")

print("\nsmallest k passing the necessary condition (exact scan):")
for n in (10, 100, 1000, 10_000):
    k = min_feasible_k(n)
    print(f"  n={n:>6}: k >= {k:>5}  (k/n = {k / n:.4f})")

print("\npure pipeline regime n = 2k-1:")
rep = pure_qss_feasibility(60)
holding = [n for _, n, ok in rep.rows if ok]
print(f"  exact scan: inequality holds up to n = {rep.largest_holding_n} "
      f"(holding n: {holding})")
print(f"  asymptotic chain: k <= {rep.chain_k_max} so n <= {rep.chain_n_max}; "
      f"stated cutoff n >= {rep.stated_cutoff_n}")
print(f"  scan agrees with chain: {rep.scan_matches_chain} "
      "(the exact condition is stronger at finite n)")
