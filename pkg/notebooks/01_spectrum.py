# %% [markdown]
# # Bound-state spectrum of the two-term exponential potential
#
# V(r) = -V0 e^{-beta r} / (1 - q e^{-beta r}) + V1 e^{-2 beta r} / (1 - q e^{-beta r})^2
#
# Everything is computed in dimensionless strengths v = 2 mu V / (beta hbar)^2.

# %%
from twoterm.potential import PotentialParams, ScaledParams, scale
from twoterm.spectrum import capital_A, energy_level, num_bound_states, spectrum

sp = ScaledParams(v0=4.0, v1=2.0, q=1.0)
print("A =", capital_A(sp), " w =", sp.w, " bound levels:", num_bound_states(sp))
print(energy_level(sp, 0))

# %% [markdown]
# With v1 = 0 the repulsive term vanishes and the levels reduce to the
# familiar Hulthen formula -[((n+1)^2 - v0) / (2(n+1))]^2.

# %%
hul = ScaledParams(100.0, 0.0, 1.0)
for b in spectrum(hul):
    ref = -(((b.n + 1) ** 2 - 100) / (2 * (b.n + 1))) ** 2
    print(f"n={b.n}  eps={b.eps:14.8f}  Hulthen={ref:14.8f}")

# %% [markdown]
# Physical units: scale a parameter set and attach the energy unit
# (beta hbar)^2 / (2 mu).

# %%
p = PotentialParams(V0=12.0, V1=3.0, beta=1.5, q=0.8, mu=0.5)
for b in spectrum(scale(p), unit=p.beta**2 * p.hbar**2 / (2 * p.mu)):
    print(f"n={b.n}  a1={b.a1:.6f}  E={b.E:.8f}")
