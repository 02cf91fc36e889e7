"""Probe the level-ideal trace conjecture for R = k[x]/(0 : n^k) on a grid.

Reports how often the hypothesis holds and whether any counterexample shows up.
"""
import argparse
import collections
import json

from teter.families import probe_grid


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--a-max", type=int, default=3)
    ap.add_argument("--k-max", type=int, default=None)
    ap.add_argument("--jsonl", help="dump every probe, one JSON object per line")
    args = ap.parse_args(argv)

    tally = collections.Counter()
    counterexamples = []
    sink = open(args.jsonl, "w") if args.jsonl else None
    for probe in probe_grid(args.n_max, args.a_max, args.k_max):
        tally[(probe.hypothesis, probe.outcome)] += 1
        if probe.counterexample:
            counterexamples.append(probe.to_dict())
        if sink:
            sink.write(json.dumps(probe.to_dict()) + "\n")
    if sink:
        sink.close()

    print(f"{'hypothesis':>10s} {'outcome':>9s} {'count':>6s}")
    for (hyp, outcome), count in sorted(tally.items()):
        print(f"{str(hyp):>10s} {outcome:>9s} {count:6d}")
    print(f"counterexamples: {len(counterexamples)}")
    for c in counterexamples[:10]:
        print(" ", json.dumps(c))


if __name__ == "__main__":
    main()
