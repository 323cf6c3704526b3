# Sweep identities exactly and look at the one that does not hold as printed.
# Run: python demos/03_checking_identities.py

from ffhyper.verify import explain_failure, sweep

#%% everything below q = 5 for the general expansion
for q in (3, 4, 5):
    print(sweep("thm2.1", q).summary())

# a seeded sample for a bigger field; rerunning gives the same report
r = sweep("thm2.1", 13, mode="sample", count=300, seed=1)
print(r.summary())

#%% the generating function in the first character
r = sweep("thm4.1", 4)
print(r.summary())
print("localization:", r.localization)

info = explain_failure(r, 0)
print("first failure at", info["params"])
for i, z in enumerate(info["terms_complex"], 1):
    print(f"  term {i}: {z.real:+.6f} {z.imag:+.6f}i")
print("  residual lhs - sum:", info["residual_complex"])

# with the localized weights the identity holds on the whole domain
print(sweep("thm4.1.corrected", 4).summary())

#%% the y = 0 probe records, it does not judge
print(sweep("probe.thm2.1.y0", 5).summary())
