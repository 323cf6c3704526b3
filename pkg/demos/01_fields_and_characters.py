# Walk through F_9: elements, tables, characters and Jacobi sums.
# Run: python demos/01_fields_and_characters.py

import numpy as np

from ffhyper import build_field, jacobi, binom, char_eval
from ffhyper.field import poly_str

#%% the field
F = build_field(9)
print("F_9 modulus:", poly_str(F.modulus), " generator:", F.generator)

# elements are base-3 digit encodings: 3 is x, 4 is x+1, 5 is x+2 ...
print("x * x =", F.mul(3, 3), "(that is", F.digits[F.mul(3, 3)].tolist(), "low to high)")
print("exp table:", F.exp_table.tolist())
print("log table:", F.log_table.tolist(), " (log 0 = -1)")

#%% characters
# chi_j(g^k) = zeta^(j k), zeta = exp(2 pi i / 8); values come back as exponents
for j in (0, 1, 4):
    print(f"chi_{j}:", [char_eval(F, j, x) for x in F.elements()])

#%% Jacobi sums are exact elements of Z[zeta_8]
J = jacobi(F, 1, 2)
print("J(chi_1, chi_2) =", J)
print("  as a complex number", np.round(J.to_complex(), 10), " |J|^2 =", round(abs(J.to_complex()) ** 2, 10))

# {A choose eps} is -1 unless A is trivial
print("{chi_3 choose eps} =", binom(F, 3, 0).reduced())
print("{eps choose eps}   =", binom(F, 0, 0).reduced())
