"""
Seeded campaigns and conjecture probes
======================================

The harness behind the command line: each campaign returns a report whose
rows compare a closed-form expectation against exact computation.
"""

# %%
from treegood import harness

rep = harness.cmd_test_theorem13(3, 3, 1, 9, samples=40, seed=0)
print(rep.counts, "exit code", rep.exit_code)
print("\n".join(rep.to_csv().splitlines()[:4]))

# %%
# Probing a conjectured threshold: sampled graphs sit exactly on it, and the
# constructions one below it serve as negative controls.
probe = harness.cmd_probe_conjecture("1.2", 3, 3, 1, 10, samples=30, seed=0)
for row in probe.rows[-2:]:
    print(row.instance, "|", row.computed, "|", row.note)

# %%
# Same seed, same bytes.
again = harness.cmd_test_theorem13(3, 3, 1, 9, samples=40, seed=0)
print("byte identical:", again.to_csv() == rep.to_csv())
