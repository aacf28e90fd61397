"""Cross-check every special case of the general index against its closed form.

Runs ``table1_crosscheck`` on the standard test families and prints one block
per law.  ``--json PATH`` also writes the raw rows.
"""

import argparse
import json
import time

from ineqlab import (Empirical, Exponential, Lognormal, Pareto, PointMass, Uniform, Zenga,
                     table1_crosscheck)


def families():
    return {
        "exp:1": Exponential(1.0),
        "unif:0,1": Uniform(0.0, 1.0),
        "lognorm:0,0.5": Lognormal(0.0, 0.5),
        "pareto:1,3": Pareto(1.0, 3.0),
        "zenga:2,2,3": Zenga(2.0, 2.0, 3.0),
        "point:3": PointMass(3.0),
        "sample[1,1,2,5,11]": Empirical([1, 1, 2, 5, 11]),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tol", type=float, default=None, help="override the per-law tolerance")
    ap.add_argument("--json", help="write all rows to this file")
    args = ap.parse_args(argv)

    report, failures = {}, 0
    for name, d in families().items():
        t0 = time.perf_counter()
        rows = table1_crosscheck(d, tol=args.tol)
        dt = time.perf_counter() - t0
        print(f"\n{name}  ({dt:.2f}s)")
        print(f"  {'row':<22}{'engine':>16}{'closed form':>16}{'|diff|':>11}  status")
        for r in rows:
            eng = "" if r.engine is None else f"{r.engine:.10g}"
            cf = "" if r.closed_form is None else f"{r.closed_form:.10g}"
            diff = "" if r.abs_diff is None else f"{r.abs_diff:.1e}"
            print(f"  {r.label:<22}{eng:>16}{cf:>16}{diff:>11}  {r.status}")
        failures += sum(not r.passed for r in rows)
        report[name] = [r.to_dict() for r in rows]

    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=2)
    print(f"\n{failures} failing row(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
