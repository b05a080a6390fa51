#!/usr/bin/env python3
"""Print the dimension-estimator calibration table.

Runs box-counting and scale-band energy estimates on fixtures with known
dimensions (segment, circle, Koch family, quasicircles) so drift from code
changes is visible at a glance.  Slow-ish: about a minute.
"""

import argparse
import math
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fracvis.fractals import circle, koch_generalized, polyline, quasicircle
from fracvis.measurelab import box_dimension, energy_dimension

KOCH_CLASSIC = math.log(4) / math.log(3)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-energy", action="store_true",
                    help="box-counting only (much faster)")
    args = ap.parse_args()

    fixtures = [
        ("segment", polyline([(0.0, 0.0), (1.0, 0.0)]), 1.0,
         {"scale_window": (1 / 256, 1 / 4)}),
        ("circle-1024", circle((0.0, 0.0), 1.0, 1024), 1.0, {}),
        ("koch d=1.26 L7", koch_generalized(KOCH_CLASSIC, 7), KOCH_CLASSIC, {}),
        ("koch d=1.5 L7", koch_generalized(1.5, 7), 1.5, {}),
        ("quasi r=0.5 L8", quasicircle(seed=0, roughness=0.5, level=8),
         float("nan"), {}),
        ("quasi r=0.6 L10", quasicircle(seed=3, roughness=0.6, level=10),
         float("nan"), {}),
    ]

    print(f"{'fixture':<18}{'target':>8}{'box':>8}{'r2':>8}"
          f"{'energy':>8}{'secs':>7}")
    for name, curve, target, box_kw in fixtures:
        t0 = time.time()
        b = box_dimension(curve, **box_kw)
        if args.skip_energy:
            e_txt = "-"
        else:
            e_txt = f"{energy_dimension(curve).value:.3f}"
        dt = time.time() - t0
        t_txt = f"{target:.3f}" if math.isfinite(target) else "-"
        print(f"{name:<18}{t_txt:>8}{b.value:>8.3f}{b.r_squared:>8.4f}"
              f"{e_txt:>8}{dt:>7.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
