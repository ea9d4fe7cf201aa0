# %% [markdown]
# When more than half the states are targets
# ==========================================
#
# With five targets out of eight, one Grover iteration lowers the success
# probability from 0.625 to 0.15625.  The deterministic search dilutes p to
# 1/4, where a single iteration is exact.

# %%
from detsearch import SearchProblem, deterministic_search, grover_search, make_plan
from detsearch.planner import no_advantage_check

problem = SearchProblem(3, ["000", "001", "011", "101", "111"])
print(f"p = {problem.p}, no advantage from Grover: {no_advantage_check(problem.p)}")

for k in range(3):
    print(f"standard, {k} iterations: {grover_search(problem, k).success_probability:.5f}")

# %%
plan = make_plan(problem.p)
print(f"k' = {plan.k_prime}, p' = {plan.p_prime:.6f}, phi = {plan.phi:.5f} rad")
report = deterministic_search(problem)
print(f"deterministic success: {report.success_probability:.12f}, measured {report.measured_outcome}")

# %% Data-qubit distribution after the run (auxiliary summed out)
probs = report.distribution_array().reshape(2, -1).sum(axis=0)
for i, prob in enumerate(probs):
    print(f"  {i:03b}  {prob:.4f}")
