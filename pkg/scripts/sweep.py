#!/usr/bin/env python3
"""Exhaustive verification sweep with timing.

Runs every applicable oracle check on every word up to a length bound and
reports per-length Lyndon counts plus wall-clock time per length. Useful
for spotting regressions before trusting larger bounds:

    python scripts/sweep.py --alphabet ab --max-len 12 --jobs 4
"""

import argparse
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from lyndonkit import OrderedAlphabet, is_lyndon, make_word, verify_word


@dataclass(frozen=True)
class SweepConfig:
    symbols: str
    max_len: int
    jobs: int


def _verify_text(symbols: str, text: str) -> tuple[str, bool, str]:
    # Worker takes plain strings so the pool never pickles Word objects.
    w = make_word(text, OrderedAlphabet(symbols))
    report = verify_word(w)
    bad = report.failures()
    return text, report.passed, bad[0].name if bad else ""


def run(config: SweepConfig) -> bool:
    alphabet = OrderedAlphabet(config.symbols)
    ok = True
    total = 0
    for n in range(1, config.max_len + 1):
        start = time.perf_counter()
        batch = ["".join(p) for p in itertools.product(alphabet.symbols, repeat=n)]
        lyndon = sum(1 for t in batch if is_lyndon(make_word(t, alphabet)))
        if config.jobs > 1:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                chunk = max(1, len(batch) // (4 * config.jobs))
                results = list(
                    pool.map(
                        _verify_text,
                        [config.symbols] * len(batch),
                        batch,
                        chunksize=chunk,
                    )
                )
        else:
            results = [_verify_text(config.symbols, t) for t in batch]
        elapsed = time.perf_counter() - start
        failures = [(t, name) for t, passed, name in results if not passed]
        total += len(batch)
        status = "ok" if not failures else f"{len(failures)} FAILURES"
        print(
            f"len {n:2d}: {len(batch):7d} words, {lyndon:6d} lyndon, "
            f"{elapsed:7.2f}s  {status}"
        )
        for text, name in failures[:5]:
            print(f"    FAIL {name} on {text}")
        ok = ok and not failures
    print(f"total: {total} words, {'all checks pass' if ok else 'FAILURES'}")
    return ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alphabet", default="ab", help="symbols in increasing order")
    parser.add_argument("--max-len", type=int, default=10)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    if args.max_len < 1 or args.jobs < 1:
        parser.error("--max-len and --jobs must be positive")
    config = SweepConfig(symbols=args.alphabet, max_len=args.max_len, jobs=args.jobs)
    return 0 if run(config) else 1


if __name__ == "__main__":
    raise SystemExit(main())
