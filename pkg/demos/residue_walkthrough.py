"""First-level expansions for alpha1 = 1 and 1/2, followed by the level-3 residues that force a logarithm."""

from fractions import Fraction

from hh3d.variational import VariationalSystem, residue_certificate

for alpha1 in (Fraction(1), Fraction(1, 2)):
    system = VariationalSystem(alpha1, order=14)
    print(f"alpha1 = {alpha1}")
    for (j, i, level), series in sorted(system.series.items()):
        head = {k: str(series.coeff(k)) for k in range(series.min_exp, series.min_exp + 3)}
        print(f"  xi_{j}_{i}^({level}) starts {head}")
    for cert in residue_certificate(alpha1):
        print(f"  Res {cert.integrand_id} = {cert.residue}")
    print()
