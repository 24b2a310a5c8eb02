"""Run the decision pipeline over a handful of parameter tuples and print one line each."""

from hh3d import analyze

ROWS = [
    (1, 1, 1, 0, 1, 0),
    (1, 1, 1, 1, 1, 1),
    (1, 2, 3, 1, 6, 1),
    (1, 16, 1, 1, 16, 1),
    (1, 15, 1, 1, 16, 1),
    (1, 1, 2, 1, 1, 1),
    (1, 2, 3, 1, 2, 1),
    (1, 1, 1, 1, 3, 1),
    (1, 1, 1, 1, 0, 1),
]

for row in ROWS:
    v = analyze(*row)
    kinds = ",".join(sorted({c["kind"] for c in v.certificates})) or "-"
    print(f"{str(row):28} {v.status:18} case={v.case or '-':10} certificates={kinds}")
