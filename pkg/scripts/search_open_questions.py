#!/usr/bin/env python3
"""Hunt counterexamples for the two open questions, at configurable scale.

  * Is every Z-matrix that is an M-matrix with property c also a P#-matrix
    once the order reaches 4?  (Settled affirmatively up to order 3, so
    order-3 runs must report zero hits.)
  * Is every P#-matrix with a nontrivial cone K Karamardian?  Hits are
    matrices the exact rule cascade cannot settle; each is re-verified
    before being logged.

Runs both targets with a shared seed and writes JSON-lines hit logs next
to this script, mirroring `karalcp search`.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from karalcp.search import hit_to_json_line, run_search  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--trials", type=int, default=20_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--entry-bound", type=int, default=3)
    args = parser.parse_args()

    out_dir = pathlib.Path(__file__).resolve().parent
    for target in ("propc-not-phash", "phash-not-karamardian"):
        out = out_dir / f"hits_{target}_n{args.n}_seed{args.seed}.jsonl"
        hits = run_search(target, args.n, args.trials, seed=args.seed,
                          entry_bound=args.entry_bound)
        with open(out, "w", encoding="utf-8") as fh:
            for hit in hits:
                fh.write(hit_to_json_line(hit, target, args.seed) + "\n")
        print(f"{target}: {len(hits)} hit(s) in {args.trials} trials -> {out.name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
