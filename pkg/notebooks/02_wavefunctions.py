# %% [markdown]
# # Eigenfunctions and their normalization
#
# R_n = N_n x^{a1} (1-x)^{(1+A)/2} P_n^{(2 a1, A)}(1 - 2x),  x = q e^{-beta r}.
# Two conventions are available: the family normalization over y = x/q and
# the physical one, int R^2 dr = 1.

# %%
import numpy as np

from twoterm.potential import ScaledParams
from twoterm.wavefunc import (
    closed_form_norm,
    eval_r,
    normalize_family,
    orthogonality_residual,
    physical_state,
)

# closed-form hypergeometric sum against adaptive quadrature
for n, a1, A, q in [(0, 1.0, 1.0, 1.0), (1, 0.5, 3.0, 0.5), (5, 2.3, 4.0, 0.3)]:
    c, g = closed_form_norm(n, a1, A, q), normalize_family(n, a1, A, q)
    print(f"n={n} a1={a1} A={A} q={q}:  closed {c:.15g}  quadrature {g:.15g}  rel {abs(c / g - 1):.1e}")

# %% [markdown]
# Overlap matrix of the nine bound states of the v0 = 100 Hulthen well.

# %%
sp = ScaledParams(100.0, 0.0, 1.0)
states = [physical_state(sp, n) for n in range(9)]
gram = np.array([[orthogonality_residual(a, b) for b in states] for a in states])
print("max |G - I| =", np.max(np.abs(gram - np.eye(9))))

# %% [markdown]
# Sampling R_n(r) on a radial grid.

# %%
r = np.linspace(0.01, 0.4, 6)
for ws in states[:3]:
    print(ws.n, np.array2string(eval_r(ws, 1.0, r), precision=4))
