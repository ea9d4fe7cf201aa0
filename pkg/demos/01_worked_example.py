# %% [markdown]
# Three targets among eight states
# ================================
#
# Search for |101>, |110>, |111> in a uniform 3-qubit register.  The ideal
# Grover count is not a whole number, so plain Grover has to round it and
# lands below certainty.  Adding one auxiliary qubit fixes that.

# %%
from detsearch import SearchProblem, compute_k, deterministic_search, grover_search, make_plan
from detsearch.simcore import bitstring

problem = SearchProblem(3, ["101", "110", "111"])
print(f"p = {problem.p}")
print(f"ideal iteration count k = {compute_k(problem.p):.4f}")

# %% Standard Grover, one iteration
standard = grover_search(problem, 1)
print(f"standard success after 1 iteration: {standard.success_probability:.5f}")

# %% The plan: k' = 1, p' = 1/4, and the auxiliary rotation angle
plan = make_plan(problem.p)
print(plan)

# %% Deterministic run, with amplitude snapshots
report = deterministic_search(problem, seed=0, trace=True)
print(f"deterministic success: {report.success_probability:.12f}")
print(f"measured: {report.measured_outcome}")

for snap in report.snapshots:
    print(f"\n-- iteration {snap.iteration}, after {snap.stage}")
    for i, a in enumerate(snap.amplitudes):
        if abs(a) > 1e-12:
            print(f"  |{bitstring(i, report.register_qubits)}>  {a.real:+.4f}")
