# %% [markdown]
# # Ising anyons: braids are not enough, one extra gate is
#
# SU(2)_2 braiding only produces Clifford operations.  Enumerating the whole
# braid orbit of three vacuum pairs shows the witness never leaves [-2, 2].

# %%
import math

import numpy as np

from anyonbell import braid_generators, build_W, get_model, phi0_state
from anyonbell.braiding import orbit_states
from anyonbell.gates import (su2_2_bell_pair, su2_2_cp, su2_2_cp_route,
                             su2_2_local_rotation_route, su2_2_phi0_prime,
                             su2_2_y_rotation_gates)

ising = get_model("su2_2")
rep = braid_generators(ising)
W = build_W(ising)
orbit = orbit_states(rep, phi0_state(ising))
values = sorted({round(W.expectation(s), 9) for s in orbit.states})
print(f"orbit size {len(orbit)}, witness values reached: {values}")

# %% [markdown]
# Route 1: a controlled phase built from braids, plus one non-Clifford
# pi/8 phase gate, saturates the Tsirelson bound.

# %%
print("CP diagonal:", np.round(np.diag(su2_2_cp()), 12))
_, value = su2_2_cp_route()
print(f"<W> = {value:.12f}   (-2 sqrt2 = {-2 * math.sqrt(2):.12f})")

# %% [markdown]
# Route 2: braid one pair of anyons across so that Alice and Bob share a Bell
# pair.  Then rotate Alice's qubit by three interaction phase gates.

# %%
print("overlap with Bell pair:", abs(np.vdot(su2_2_bell_pair(), su2_2_phi0_prime())))
for g in su2_2_y_rotation_gates():
    print(f"  phase gate on pair {g.pair}: " + ", ".join(f"channel {c}: {t:+.4f}" for c, t in g.phases.items()))
_, value = su2_2_local_rotation_route()
print(f"<W> = {value:.12f}")
