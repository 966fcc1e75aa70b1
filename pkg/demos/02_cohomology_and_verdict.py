"""Differentials, Betti tables, and the dimension-inequality verdict.

Run from the repository root:

    python demos/02_cohomology_and_verdict.py
"""

from hilali import (certify_elliptic, betti_complete, classify,
                    euler_characteristics, format_element, hilali_verdict,
                    load_model, parse_expression)

# The bundled mixed-powers model: two even generators of degrees 2 and 6,
# three odd ones, with entangled differential images.
model = load_model("corpus/pairwise-nonregular-n2r1.model.json")
print("model:", model.name)
for g in model.universe.generators:
    image = model.d.of_generator(g.name)
    rhs = format_element(image) if not image.is_zero else "0"
    print(f"  deg {g.name} = {g.degree:2d},  d {g.name} = {rhs}")

# The differential makes twice a power of each even generator exact; that is
# what certifies ellipticity through the finite-length quotient criterion.
potential = parse_expression("x1^4*y1 + x1*y2 - x2*y3", model.universe)
print("\nd(x1^4*y1 + x1*y2 - x2*y3) =", format_element(model.apply(potential)))

print("\nclassification:", classify(model))
cert = certify_elliptic(model)
print("elliptic:", cert.elliptic, "|", cert.evidence)

table = betti_complete(model, cert)
print("\nBetti numbers up to the formal dimension bound"
      f" {cert.formal_dimension_bound}:")
print("  ", dict(sorted(table.dims.items())))
chi, chi_pi = euler_characteristics(model, table)
print(f"total dim H = {table.total_dim},  chi = {chi},  chi_pi = {chi_pi}")

verdict = hilali_verdict(model)
print(f"\nverdict: dim V = {verdict.dim_v} <= dim H = {verdict.dim_h}:",
      "HOLDS" if verdict.holds else "FAILS")
