#!/usr/bin/env python3
"""Low-dimensional soundness sweep.

Runs the brute-force oracle over the standard density matrix at d = 2..4 and
prints one line per configuration: level-set verdict, worst margin, and the
gap between the certificate and its independently recomputed weak-type ratio.
"""
import argparse

from hlmax import RadialDensity, run_oracle


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=20240601)
    args = ap.parse_args()

    families = {
        "lebesgue": RadialDensity.lebesgue,
        "restricted-lebesgue": RadialDensity.restricted_lebesgue,
        "power(t=0.5)": lambda d: RadialDensity.power(d, 0.5),
        "truncated-power(t=0.5)": lambda d: RadialDensity.truncated_power(d, 0.5),
    }
    failures = 0
    for name, make in families.items():
        for d in (2, 3, 4):
            for p in (1.0, 1.2):
                rep = run_oracle(
                    make(d), p, 0.5, 1.0, seed=args.seed + d, samples=args.samples
                )
                status = "ok" if rep.sound() else "FAIL"
                failures += status == "FAIL"
                print(
                    f"{status:4s} {name:24s} d={d} p={p:<4} "
                    f"margin={rep.worst_margin:+.4f} gap={rep.dual_path_gap:+.2e}"
                )
    return 3 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
