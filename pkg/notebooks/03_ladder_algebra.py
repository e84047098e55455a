# %% [markdown]
# # Ladder operators on a fixed-(a1, A) family
#
# Holding a1 and A fixed, first-order operators step the Jacobi degree n down
# and up. Together with the weight operator n + (1+A)/2 they close an su(1,1)
# algebra whose Casimir is c(c-1), c = (1+A)/2.

# %%
from twoterm.ladder import (
    apply_lower,
    apply_raise,
    casimir_orderings,
    commutator_check,
    family_state,
    ladder_residuals,
)

a1, A, q = 0.5, 3.0, 1.0
for n in range(5):
    res = ladder_residuals(n, a1, A, q)
    print(f"n={n}  lower {res['lower']:.1e}  raise {res['raise']:.1e}")

# %% [markdown]
# Lowering then raising telescopes to n(n+A); the norm constants cancel.

# %%
s = family_state(3, a1, A, q)
down, _ = apply_lower(s)
_, c = apply_raise(down)
print("raise(lower(f_3)) / f_3 =", c, " expected", 3 * (3 + A))

# %%
for n in (1, 4, 8):
    print(n, commutator_check(n, a1, A, q))
print("Casimir orderings at n=0..3:", [casimir_orderings(n, A) for n in range(4)])
