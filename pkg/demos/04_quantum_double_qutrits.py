# %% [markdown]
# # D(S3) magnetic fluxes: a three-outcome witness
#
# Pairs of Phi fluxes fuse to 1, Lambda or Phi, so each pair measurement has
# three outcomes.  The witness I3 is a CGLMP-type combination of projectors.
# Deterministic local strategies reach at most 2.

# %%
import numpy as np

from anyonbell import braid_generators, build_I3, get_model, lhv_bound_oracle, phi0_state
from anyonbell.braiding import ds3_permutation_scan
from anyonbell.gates import DS3_REFERENCE_ANGLES, ds3_family_value, optimize_ds3_family

ds3 = get_model("ds3")
I3 = build_I3(ds3)
lhv = lhv_bound_oracle("I3")
print(f"LHV: max {lhv.max}, min {lhv.min} (the minimum is not -2)")
print("eigenvalue range of I3:", round(I3.min_eigenvalue, 6), "to", round(I3.max_eigenvalue, 6))

# %% [markdown]
# D(S3) braids square to one, so braiding only permutes fluxes.  All 720
# permutations of the six fluxes stay inside the classical range.

# %%
scan = ds3_permutation_scan(braid_generators(ds3), I3)
print(f"720 permutations: values in [{scan.values.min():.4f}, {scan.values.max():.4f}]")

# %% [markdown]
# Letting neighbouring fluxes interact for a while adds channel-dependent
# phases.  Six such phases on top of a fixed braid give a violation.

# %%
print("<I3> at the reference angles:", round(ds3_family_value(DS3_REFERENCE_ANGLES), 6))
res = optimize_ds3_family(restarts=10, seed=0)
print(f"Nelder-Mead, 10 restarts: {res.value:.6f} at {np.round(res.angles, 4)}")
