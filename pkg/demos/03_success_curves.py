# %% [markdown]
# Success probability across p
# ============================
#
# Standard Grover with the iteration count rounded to the nearest integer
# oscillates below 1; the deterministic search sits at 1 for every p.  The
# same table is what `detsearch sweep` writes as CSV.

# %%
import numpy as np

from detsearch.cli import SWEEP_HEADER, sweep_rows

rows = np.array(sweep_rows(0.01, 0.99, 99))
print(", ".join(SWEEP_HEADER))
for row in rows[::7]:
    print(f"{row[0]:.3f}  k={row[1]:7.3f}  k'={int(row[2])}  standard={row[3]:.4f}  deterministic={row[4]:.6f}")

# %%
standard, deterministic = rows[:, 3], rows[:, 4]
print(f"standard:      min {standard.min():.4f}, mean {standard.mean():.4f}")
print(f"deterministic: min {deterministic.min():.10f}")

# %% Optional plot, if matplotlib is around
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.plot(rows[:, 0], standard, label="standard (rounded k)")
    ax.plot(rows[:, 0], deterministic, label="deterministic")
    ax.set_xlabel("initial success probability p")
    ax.set_ylabel("final success probability")
    ax.legend()
    fig.tight_layout()
    fig.savefig("success_curves.png", dpi=120)
    print("wrote success_curves.png")
