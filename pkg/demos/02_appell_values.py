# Evaluate the two F1 analogues and the general expansion over F_7.
# Run: python demos/02_appell_values.py

from ffhyper import build_field, f1_double, f1_single, thm21_terms
from ffhyper.cyclo import cyc_sum

F = build_field(7)
A, B, Bp, C = 1, 2, 3, 5
x, y = 3, 4

#%% the double-sum F1
v = f1_double(F, A, B, Bp, C, x, y)
print("F1(A; B, B'; C; x, y) =", v, "~", round(v.to_complex().real, 9), round(v.to_complex().imag, 9))

# swapping (B, x) with (B', y) leaves it unchanged
print("symmetric:", v == f1_double(F, A, Bp, B, C, y, x))

# the single-sum analogue is a different function
print("single-sum analogue:", f1_single(F, A, B, Bp, C, x, y))

#%% four-term expansion, term by term
terms = thm21_terms(F, A, B, Bp, C, x, y)
for i, t in enumerate(terms, 1):
    z = t.to_complex()
    print(f"  term {i}: {z.real:+.6f} {z.imag:+.6f}i")
print("sum of terms equals F1:", cyc_sum(terms, F.q - 1) == v)

#%% F1 is zero on the axes
print([f1_double(F, A, B, Bp, C, t, 0).is_zero() for t in F.elements()])
