"""The spectral shift s(gamma) and the Scott coefficient q = 1/2 + s.

Tabulates the shift against Schwinger's closed-form approximation
(zeta(3) - 5 pi^2/24) gamma^2, writes a plot-ready CSV, and probes the
strong-coupling limit where q approaches about -1.91.

Run: python demos/scott_shift_curve.py [out.csv]
"""

import sys

from relscott import SCHWINGER_COEFFICIENT, schwinger_shift, shift


def main() -> None:
    print(f"Schwinger coefficient: {SCHWINGER_COEFFICIENT:.9f}")
    print(f"{'gamma':>8} {'s(gamma)':>14} {'q = 1/2 + s':>14} {'Schwinger q':>14} {'tail':>10}")
    rows = []
    for i in range(12):
        g = 0.0 + 0.9 * i / 11
        res = shift(g, 1e-8)
        q = 0.5 + res.value
        q_schw = 0.5 + schwinger_shift(g)
        rows.append((g, res.value, q, q_schw))
        print(f"{g:8.4f} {res.value:14.9f} {q:14.9f} {q_schw:14.9f} {res.tail_estimate:10.1e}")

    print("\nstrong-coupling approach to the limit (about -1.91):")
    for eps in (1e-4, 1e-6, 1e-8, 1e-10):
        res = shift(1.0 - eps, 1e-6)
        print(f"  gamma = 1 - {eps:.0e}:  q = {0.5 + res.value:.6f}")

    if len(sys.argv) > 1:
        path = sys.argv[1]
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("gamma,s_d,scott_q,schwinger_q\n")
            for g, s, q, qs in rows:
                fh.write(f"{g:.12g},{s:.12g},{q:.12g},{qs:.12g}\n")
        print(f"\nwrote {path}")


if __name__ == "__main__":
    main()
