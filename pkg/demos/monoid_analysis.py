"""Walk through the algebraic definability checks on a few regular languages."""

from betwixt import compile_min_dfa, definability_report, parse_regex, syntactic_monoid
from betwixt.monoid import is_in_DA, is_in_MeDA, omega_power

# (ab)* is star-free but needs more than two variables once successor is gone
d = compile_min_dfa(parse_regex("(ab)*"))
m = syntactic_monoid(d)
print("(ab)*: dfa states", d.n_states, "monoid size", m.size)
print("  idempotents:", [m.names[x] for x in range(m.size) if omega_power(m, x) == x])
print("  in DA:", is_in_DA(m), " in MeDA:", is_in_MeDA(m))

# the report bundles every verdict at once
for text in ["(a+b)*a(a+b)*", "(ab)*", "(a(ab)*b)*", "(a+b)*bab^+ab(a+b)*", "(aa)*"]:
    r = definability_report(text)
    print(f"{text:24s} |M|={r.monoid_size:3d}  {r.verdicts}")

# over three letters a positive between-verdict is only a necessary condition
print(definability_report("(a+b+c)*ac*b(a+b+c)*").verdicts["FO2bet"])
