"""Closed-form spectra, the numeric oracle, and expansion verdicts.

The exact multiset is assembled without ever materializing a matrix, then
cross-validated against a dense eigendecomposition of the constructed graph.
The bipartite lift m -> +-sqrt(q+m) gives D(4,q), whose second eigenvalue
decides the Ramanujan question.
"""

from luspec import closedform, ff, graphs, oracle

for q in (3, 5):
    spec = ff.field_for(q)
    s = closedform.spectrum_closed(spec)
    print(f"Gamma(4,{q}) closed form:")
    for e in s.entries:
        print(f"  {e.approx:+12.6f}  x{e.multiplicity:<4} {e.value.serial()}")
    ns = oracle.numeric_spectrum(graphs.build_gamma(spec))
    print(" oracle:", oracle.compare_spectra(s, ns).text(), "\n")

# bipartite lift: D(4,5)
s5 = closedform.spectrum_closed(ff.field_for(5))
lifted = closedform.lift_to_bipartite(s5, 5)
print("D(4,5) spectrum (positive half):")
for e in lifted.entries:
    if e.approx > 1e-9:
        print(f"  +-{e.approx:.6f}  x{e.multiplicity}")
print(f"  0 with multiplicity {lifted.multiplicity_of(closedform.ExactValue.integer(0))}\n")

# expansion reports: the family is a good expander, near Ramanujan
reports = [oracle.expansion_report(q) for q in (5, 7, 11, 13, 19, 37)]
print(oracle.expansion_table(reports))
print()
for r in reports:
    print(r.verdict())
