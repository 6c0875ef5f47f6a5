"""Hydrogenic level structure at strong coupling.

Prints Dirac vs Schroedinger energies for the lowest shells at gamma = 0.7,
the fine-structure splitting per channel, and the Coulomb expectation values
against their nonrelativistic virial limit.

Run: python demos/hydrogenic_levels.py
"""

from relscott import (
    Coupling,
    LevelIndex,
    coulomb_expectation,
    dirac_level,
    fine_structure_term,
    iter_channels,
    level_difference,
    schroedinger_level,
)


def main() -> None:
    g = Coupling(0.7)
    print(f"coupling gamma = {g.gamma}")
    print(f"{'level':>12} {'lambda_D':>14} {'lambda_S':>14} {'difference':>14} {'fine structure':>15}")
    for channel in iter_channels(2):
        for n in (1, 2):
            idx = LevelIndex(n, channel)
            lam_d = dirac_level(g, idx)
            lam_s = schroedinger_level(g, n, channel.l)
            diff = level_difference(g, idx)
            fs = fine_structure_term(g, idx)
            label = f"n={n} l={channel.l} j={channel.j}"
            print(f"{label:>12} {lam_d:14.9f} {lam_s:14.9f} {diff:14.3e} {fs:15.3e}")

    print("\nCoulomb expectation <gamma/|x|> vs virial value gamma^2/(n+l)^2:")
    for gamma in (0.1, 0.5, 0.9):
        idx = LevelIndex(2, next(iter(iter_channels(1))))  # n=2, l=0, j=1/2
        bg = coulomb_expectation(gamma, idx)
        virial = gamma**2 / idx.principal**2
        print(f"  gamma={gamma}: {bg:.8f}  (virial {virial:.8f}, ratio {bg / virial:.4f})")

    print("\ncancellation control: the difference stays clean at n + l = 10^4")
    idx = LevelIndex(9999, next(iter(iter_channels(1))))
    print(f"  level_difference(0.9, n=9999, l=0, j=1/2) = {level_difference(0.9, idx):.6e}")


if __name__ == "__main__":
    main()
