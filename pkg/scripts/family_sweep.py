"""Sweep the closed-form trace families and compare each against the engine.

    python3 scripts/family_sweep.py --max-exp 4 --out sweep.json
"""
import argparse
import itertools
import json
import sys
import time

from teter import families as fam


def aci_rows(max_exp):
    for n in (2, 3):
        for a in itertools.product(range(2, max_exp + 1), repeat=n):
            for b in itertools.product(*(range(ai) for ai in a)):
                if sum(1 for bi in b if bi > 0) >= 2:
                    yield fam.aci_report(a, b, verify=True)


def chopin_rows(max_exp):
    for n in (2, 3):
        for a in itertools.combinations_with_replacement(range(1, max_exp + 1), n):
            for k in range(1, min(a) + 1):
                yield fam.chopin_report(a, k, verify=True)


def mozart_rows(max_n):
    for n in range(2, max_n + 1):
        for k in range(1, n):
            yield fam.mozart_report(n, k, verify=True)


def ci2_rows(max_exp):
    for a in range(2, max_exp + 1):
        for b in range(a, max_exp + 1):
            for k in range(1, a + b - 1):
                yield fam.ci2_report(a, b, k, verify=True)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-exp", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=6, help="largest n for the squarefree family")
    ap.add_argument("--out", help="write every report as JSON here")
    args = ap.parse_args(argv)

    sweeps = {
        "aci": aci_rows(args.max_exp),
        "chopin": chopin_rows(min(args.max_exp, 3)),
        "mozart": mozart_rows(args.max_n),
        "ci2": ci2_rows(args.max_exp),
    }
    reports, failed = [], 0
    for name, rows in sweeps.items():
        t0 = time.perf_counter()
        rows = list(rows)
        bad = [r for r in rows if r.verified is False]
        failed += len(bad)
        reports.extend(r.to_dict() for r in rows)
        print(f"{name:7s} {len(rows):5d} cases  {len(bad)} mismatches  {time.perf_counter() - t0:.2f}s")
        for r in bad:
            print("  mismatch:", json.dumps(r.params))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(reports, fh, indent=1)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
