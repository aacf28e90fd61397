"""Write CSV data for plotting societal curves and gamble densities.

One file per law with columns p, L, B, LCE, UCE, R, and one file with the
densities of a few H- and G-generated gambles.
"""

import argparse
import csv
from pathlib import Path

import numpy as np

from ineqlab import (BetaGamble, Exponential, GGenerated, HGenerated, Lognormal, Pareto,
                     SocietalFunction, Uniform, Zenga, exp_g_generator, exp_h_generator,
                     power_generator)

LAWS = {
    "exponential": Exponential(1.0),
    "uniform": Uniform(0.0, 1.0),
    "lognormal": Lognormal(0.0, 0.5),
    "pareto": Pareto(1.0, 3.0),
    "zenga_2_3_2": Zenga(2.0, 3.0, 2.0),
    "zenga_2_2_3": Zenga(2.0, 2.0, 3.0),
}

GAMBLES = {
    "h_t^1.5": HGenerated(power_generator(1.5)),
    "h_t^3": HGenerated(power_generator(3.0)),
    "h_exp_2": HGenerated(exp_h_generator(2.0)),
    "g_t^0.5": GGenerated(power_generator(0.5)),
    "g_exp_2": GGenerated(exp_g_generator(2.0)),
    "beta_2_2": BetaGamble(2, 2),
}


def _write(path, rows):
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figure_data", help="output directory")
    ap.add_argument("--grid", type=int, default=199, help="interior grid points i/(n+1)")
    args = ap.parse_args(argv)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    t = np.arange(1, args.grid + 1) / (args.grid + 1)
    for name, d in LAWS.items():
        _write(out / f"curves_{name}.csv", SocietalFunction(d).curve_rows(t))
    rows = [{"t": float(s), **{k: float(g.density(s)) for k, g in GAMBLES.items()}} for s in t]
    _write(out / "gamble_densities.csv", rows)
    print(f"wrote {len(LAWS) + 1} files to {out}/")


if __name__ == "__main__":
    main()
