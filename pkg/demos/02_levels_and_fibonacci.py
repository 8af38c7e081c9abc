# %% [markdown]
# # Deformed spins: SU(2)_k and Fibonacci anyons
#
# Replacing ordinary spin by SU(2)_k swaps the recoupling matrix for its
# q-deformed version.  The largest Bell violation then depends on k.

# %%
import math

import numpy as np

from anyonbell import apply_word, braid_generators, build_W, get_model, phi0_state
from anyonbell.braiding import FIB_WORD_25
from anyonbell.observables import su2k_max_violation
from anyonbell.report import fig4_table

print(" k      max eig W     closed form")
for k in (2, 3, 4, 5, 10, 100, 1000):
    top = build_W(get_model(f"su2k:{k}")).max_eigenvalue
    print(f"{k:4d}   {top:.10f}   {su2k_max_violation(k):.10f}")
print(f"  oo   {build_W(get_model('su2')).max_eigenvalue:.10f}   sqrt7 = {math.sqrt(7):.10f}")

# %% [markdown]
# k = 2 hits 2 sqrt2 exactly.  Fibonacci anyons share the k = 3 recoupling
# data, so their maximum is 2 sqrt(-7 + 4 sqrt5).

# %%
fib = get_model("fib")
Wf = build_W(fib)
print("Fibonacci max eig:", Wf.max_eigenvalue, " vs", 2 * math.sqrt(-7 + 4 * math.sqrt(5)))

# %% [markdown]
# Fibonacci braiding is dense, so braids alone can get close.  A 25-letter
# word does most of the job.

# %%
rep = braid_generators(fib)
state = apply_word(rep, FIB_WORD_25, phi0_state(fib))
print("word:", FIB_WORD_25)
print("<W> after braiding:", round(Wf.expectation(state), 6))

# %% [markdown]
# The same curves as a table (a, SU(2), SO(3)_3, SU(2)_2).  `anyon-bell fig4`
# writes the full CSV.

# %%
grid, vals = fig4_table(samples=11)
for a, row in zip(grid, vals):
    print(f"{a:+.1f}  " + "  ".join(f"{x:+.4f}" for x in row))
