"""Purity of a thermal admixture across temperature.

Tabulates mu(p, T) for the one-photon state at several mixing weights,
together with the high- and low-temperature estimates, showing the
non-monotonic dip and the regime where each estimate is trustworthy.
"""

import numpy as np

from focktomo import NoisyState, new_superposition, purity_analytic, purity_limits

ONE = new_superposition([0, 1])


def main():
    print("purity of (1 - p) |1><1| + p rho_th(T)\n")
    header = f"{'T':>8s}" + "".join(f"  {'p=' + str(p):>10s}" for p in (0.1, 0.3, 0.5, 0.9))
    print(header)
    for t in (0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 20.0, 100.0):
        row = f"{t:8.2f}"
        for p in (0.1, 0.3, 0.5, 0.9):
            row += f"  {purity_analytic(NoisyState(ONE, p, t)):10.6f}"
        print(row)

    print("\nestimate quality at p = 0.3 (exact / high-T / low-T):")
    for t in (0.05, 0.5, 5.0, 100.0):
        mix = NoisyState(ONE, 0.3, t)
        exact = purity_analytic(mix)
        high, low = purity_limits(mix)
        print(f"  T = {t:6.2f}: {exact:.6f} / {high:.6f} / {low:.6f}")

    # purity is not monotonic in T for states with c_0 = 0: warming the
    # admixture first raises mu before the usual decay takes over
    ts = np.linspace(0.05, 3.0, 60)
    mus = [purity_analytic(NoisyState(ONE, 0.3, float(t))) for t in ts]
    k = int(np.argmax(mus))
    print(f"\npurity peaks at {mus[k]:.6f} near T = {ts[k]:.3f} for p = 0.3")


if __name__ == "__main__":
    main()
