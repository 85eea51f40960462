"""Render the tomogram surfaces of four reference superpositions.

Each state gets a 256 x 512 grid, a PGM heatmap with its axis sidecar,
and a plotting-tool-ready matrix text file.  The vacuum-plus-one state
carries the sin(theta) interference stripe, the 0+2 state is pi-periodic
in theta, and the three-component state shows the double stripe pattern.
Output lands in demos/out/.
"""

import cmath
import math
import pathlib

from focktomo import HeatmapSpec, emit_heatmap, emit_matrix_text, new_superposition, tomogram_grid

OUT = pathlib.Path(__file__).resolve().parent / "out"

GALLERY = [
    ("vac_plus_i_one", [1, 1j]),
    ("vac_plus_two", [1, 0, 1]),
    ("vac_plus_three", [1, 0, 0, 1]),
    ("vac_one_two_phased", [1, cmath.exp(2j * math.pi / 3), 1]),
]


def main():
    OUT.mkdir(exist_ok=True)
    for name, amps in GALLERY:
        state = new_superposition(amps, normalize=True)
        grid = tomogram_grid(state, n_x=512, n_theta=256)
        emit_heatmap(grid, OUT / f"{name}.pgm", HeatmapSpec())
        emit_matrix_text(grid, OUT / f"{name}.dat")
        peak = float(grid.values.max())
        print(f"{name:22s} N={state.n_max}  peak w = {peak:.6f}  -> {name}.pgm, {name}.dat")
    print(f"\nwrote {2 * len(GALLERY)} files under {OUT}")


if __name__ == "__main__":
    main()
