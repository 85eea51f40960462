"""Run the physicality checks on a clean grid and on a corrupted copy."""

from focktomo import (
    STRICT_THRESHOLDS,
    TomogramGrid,
    new_superposition,
    report_text,
    tomogram_grid,
    validate,
)


def main():
    state = new_superposition([1, 0, 0, 1], normalize=True)
    grid = tomogram_grid(state, n_x=161, n_theta=16)

    print("clean model grid, strict thresholds:\n")
    print(report_text(validate(grid, STRICT_THRESHOLDS)))

    # break the X -> -X, theta -> theta + pi mirror symmetry in one bin,
    # hard enough to clear the loose default symmetry threshold of 1e-2
    bad = grid.values.copy()
    bad[3, 45] += 5e-2
    corrupted = TomogramGrid(grid.x_min, grid.x_max, grid.n_x, grid.n_theta, bad, grid.meta)

    print("same grid with one bin nudged by 5e-2, default thresholds:\n")
    print(report_text(validate(corrupted)))


if __name__ == "__main__":
    main()
