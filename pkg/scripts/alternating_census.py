"""|Desc^1(A_n -> S_n)| for a range of n, with timings and the closed form."""
import argparse
import time

from descentcoh import algebra as alg
from descentcoh import descent as ds


def closed_form(n):
    if n == 3:
        return 1
    k, r = divmod(n, 4)
    return k if r in (0, 1) else k + 1


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=7)
    args = p.parse_args()
    print(f"{'n':>2} {'cocycles':>9} {'classes':>8} {'formula':>8} {'seconds':>8}")
    for n in range(args.min, args.max + 1):
        t0 = time.perf_counter()
        s = alg.symmetric_group(n)
        d = ds.desc1(alg.restrict(alg.alternating_subgroup(s))[1])
        dt = time.perf_counter() - t0
        print(f"{n:>2} {len(d.cocycles):>9} {len(d):>8} {closed_form(n):>8} {dt:>8.2f}")


if __name__ == "__main__":
    main()
