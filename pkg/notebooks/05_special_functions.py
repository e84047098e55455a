# %% [markdown]
# # Special-function building blocks

# %%
import math

from twoterm.specfun import (
    JacobiPoly,
    gauss_2f1,
    integrate,
    jacobi_derivative,
    jacobi_eval,
    jacobi_identity_residuals,
    jacobi_sum,
)

p = JacobiPoly(6, 1.4, 0.3)
print("recurrence", jacobi_eval(p, 0.2), " exact rational sum", jacobi_sum(6, 1.4, 0.3, 0.2, exact=True))
print("derivative", jacobi_derivative(p, 0.2))
print("identity residuals", jacobi_identity_residuals(6, 1.4, 0.3, 0.2))

# %%
print("2F1(1,1;2;1/2) =", gauss_2f1(1, 1, 2, 0.5), " 2 ln 2 =", 2 * math.log(2))
print("int_0^1 y^2 (1-y)^2 dy =", integrate(lambda y: y**2 * (1 - y) ** 2, 0, 1), " 1/30 =", 1 / 30)

# %%
from twoterm import verify

for row in verify.specfun_suite(draws=200):
    print(f"{row['check']:36s} {row['residual']:.1e}  {'ok' if row['pass'] else 'FAIL'}")
