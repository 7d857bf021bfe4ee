"""
Full reports for the bundled curves
===================================

``analyze`` combines the Jacobian invariants, the local singularity data and
the Betti numbers of the Milnor fiber ``f = 1`` into one report.
"""

from planecurves.report import analyze, load_curve_file
from planecurves.verify import default_fixture_dir

for name in ("nodal_cubic", "three_lines", "six_cusp_sextic", "prop1_sextic"):
    cf, eq = load_curve_file(default_fixture_dir() / f"{name}.json")
    print(analyze(cf, eq).to_text())
    print()

# Curves whose complement has an abelian fundamental group get an exact
# Alexander polynomial (t - 1)^(r - 1); for the others b1 is only bounded.
