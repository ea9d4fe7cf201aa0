# %% [markdown]
# Arbitrary initial states
# ========================
#
# Amplitude amplification reflects about whatever state the preparation
# produces.  Here the register starts in a fixed non-uniform 2-qubit state
# with weight 0.1 on |00>.

# %%
import numpy as np

from detsearch import SearchProblem, amplitude_amplification, deterministic_search, from_amplitudes
from detsearch.planner import predicted_success

state = from_amplitudes(np.sqrt([0.1, 0.3, 0.4, 0.2]))
problem = SearchProblem(2, ["00"], state)

for k in range(4):
    sim = amplitude_amplification(problem, k).success_probability
    print(f"{k} iterations: simulated {sim:.6f}, closed form {predicted_success(problem.p, k):.6f}")

# %%
report = deterministic_search(problem)
print(f"deterministic: {report.iterations_used} iterations, phi={report.plan.phi:.5f}, "
      f"success {report.success_probability:.12f}")
