"""Sweep every valid sequence up to a size bound and compare formulas with rank oracles.

    python scripts/oracle_sweep.py --max-points 400 --primes 2 3
"""

from __future__ import annotations

import argparse
import itertools
import time
from dataclasses import dataclass, field

from nestedcodes import certify
from nestedcodes.errors import InvalidInput
from nestedcodes.variety import cardinality, validate_sequence


@dataclass
class Config:
    primes: tuple[int, ...] = (2, 3)
    max_n: int = 4
    max_exponent: int = 2
    max_points: int = 400
    checks: tuple[str, ...] = field(default_factory=lambda: certify.CHECKS)


def candidate_sequences(cfg: Config):
    for p in cfg.primes:
        for n in range(1, cfg.max_n + 1):
            for exps in itertools.combinations_with_replacement(range(1, cfg.max_exponent + 1), n + 1):
                try:
                    s = validate_sequence(p, [p**e for e in exps])
                except InvalidInput:
                    continue
                if cardinality(s) <= cfg.max_points:
                    yield s


def run(cfg: Config) -> int:
    disagreements = 0
    total = 0
    for s in candidate_sequences(cfg):
        start = time.perf_counter()
        res = certify.oracle_agreement(s, cfg.checks)
        ok = certify.all_agree(res)
        total += 1
        disagreements += not ok
        summary = ", ".join(f"{k} {v['agree']}/{v['total']}" for k, v in res.items())
        print(f"{'ok ' if ok else 'BAD'} {str(s):<24} |X|={cardinality(s):<5} {summary} "
              f"({time.perf_counter() - start:.2f} s)")
    print(f"{total - disagreements}/{total} sequences agree on every check")
    return 1 if disagreements else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-exponent", type=int, default=2)
    ap.add_argument("--max-points", type=int, default=400)
    a = ap.parse_args()
    return run(Config(tuple(a.primes), a.max_n, a.max_exponent, a.max_points))


if __name__ == "__main__":
    raise SystemExit(main())
