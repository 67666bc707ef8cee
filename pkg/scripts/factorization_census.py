"""|FAC(A)| and |Fac(A)| for the groups of the default catalog."""
import argparse
import time

from descentcoh import factorization as fz
from descentcoh.catalog import default_catalog
from descentcoh.documents import Builder


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-order", type=int, default=24)
    args = p.parse_args()
    bld = Builder()
    print(f"{'group':<16} {'order':>5} {'FAC':>5} {'Fac':>5} {'seconds':>8}")
    for e in default_catalog()["entries"]:
        if e["type"] != "group":
            continue
        g = bld.algebra(e["algebra"])
        if g.order > args.max_order:
            continue
        t0 = time.perf_counter()
        recs = fz.fac(g)
        classes = fz.fac_classes(g, recs)
        dt = time.perf_counter() - t0
        print(f"{e['name']:<16} {g.order:>5} {len(recs):>5} {len(classes):>5} {dt:>8.2f}")


if __name__ == "__main__":
    main()
