#!/usr/bin/env python3
"""Boltzmann sampling demo.

Draws random lattice zonotopes at the saddle parameter for the 10^4 box,
compares Monte-Carlo statistics with their exact truncated-sum oracles and
the asymptotic moment formulas, and writes one sample's polygon.
"""

import zonocount as zc

n_box = 1e4
theta = zc.theta_tilde(2, n_box)
cutoff = 1e-12
print(f"saddle parameter for [0,{n_box:g}]^2: theta = {theta:.8f}")

system = zc.class_system(2, theta, cutoff)
print(f"classes with q >= {cutoff:g}: {system.ncls} "
      f"(1-norm radius {system.l1_max})")
print(f"truncation bias estimate: {zc.truncation_bias_estimate(2, theta, cutoff):.2e}")

sample = zc.boltzmann_sample(2, theta, cutoff, seed=42)
print(f"\nseed 42 draw: {sample.direction_count} directions, "
      f"endpoint {sample.endpoint}")
print("first entries:", sample.entries[:5])

print("\n== 400 seeded samples vs oracles ==")
stats = zc.sample_stats(2, theta, cutoff, 400, base_seed=7, tracked=[((1, 1), 0)])
print(f"direction count: empirical {stats.direction_mean:.2f} "
      f"+/- {stats.direction_stderr:.2f}")
print(f"   truncated sum oracle: {stats.expected_directions:.2f}")
print(f"   asymptotic mean diameter: {zc.mean_diameter_asympt(2, n_box):.2f}")
print(f"endpoint: empirical {tuple(round(x, 1) for x in stats.endpoint_mean)}")
print(f"   truncated sum oracle: "
      f"{tuple(round(x, 1) for x in zc.expected_endpoint_truncated(2, theta, cutoff))}")
tr = stats.tracked[((1, 1), 0)]
print(f"omega((1,1) class 0): empirical mean {tr.mean:.3f} +/- {tr.stderr:.3f}, "
      f"variance {tr.variance:.3f}")
print(f"   geometric law: mean {tr.q / (1 - tr.q):.3f}, "
      f"variance {tr.q / (1 - tr.q) ** 2:.3f}")
lead_mean, lead_var = zc.mean_occurrence_asympt(2, n_box, (1, 1))
print(f"   leading forms: mean {lead_mean:.3f}, variance {lead_var:.3f}")

print("\nwriting 50 sample rows to samples.csv")
zc.write_sample_csv("samples.csv", 2, theta, cutoff, 50, 7, tracked=[((1, 1), 0)])

print("writing the seed-42 polygon to polygon.csv")
zc.write_polygon_csv("polygon.csv", sample)
verts = zc.to_polygon(sample)
print(f"polygon has {len(verts)} vertices; bounding box "
      f"({max(v[0] for v in verts) - min(v[0] for v in verts)}, "
      f"{max(v[1] for v in verts) - min(v[1] for v in verts)})")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping PNG")
else:
    xs = [v[0] for v in verts] + [verts[0][0]]
    ys = [v[1] for v in verts] + [verts[0][1]]
    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    ax.plot(xs, ys, lw=0.8)
    ax.set_aspect("equal")
    ax.set_title(f"Random lattice zonotope at theta = {theta:.4f} (seed 42)")
    fig.tight_layout()
    fig.savefig("zonotope.png", dpi=120)
    print("wrote zonotope.png")
