"""Derive the Lame data of both normal branches at alpha1 = 1/16 and classify it."""

from fractions import Fraction

from hh3d.lame import classify_theoremB1, lame_coefficients

for branch in ("Xi1", "Xi2"):
    data = lame_coefficients(Fraction(1, 16), branch)
    verdict = classify_theoremB1(data)
    print(f"branch {branch}: case {verdict.case}")
    for name, value in data.coefficients().items():
        print(f"  {name} = {value}")
    for alt in verdict.alternatives:
        print("  integrable only if " + " and ".join(f"{lab} = 0" for lab, _ in alt))
