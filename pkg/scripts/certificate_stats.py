"""Size and shape of the certificates: quotient terms, degrees, orders, scales and unit multipliers.

Shows where plain division under the given variable order was not enough and
an order search, pseudo-division scale or power of t was needed.
"""

import argparse
from collections import Counter

from edwardsproof.identities import run_all


def main(names=None):
    report = run_all(names=names, audit=False)
    kinds = Counter()
    print(f"{'entry':28s} {'label':34s} {'div':>3s} {'qterms':>7s} {'qdeg':>4s} {'scale':>6s} {'unit':>5s} order")
    for entry, label, cert in report.certificates():
        qterms = sum(len(q) for q in cert.quotients)
        qdeg = max((q.total_degree() for q in cert.quotients if q), default=0)
        unit = cert.unit.to_text() if cert.unit is not None else "-"
        kinds[cert.order.kind] += 1
        print(
            f"{entry:28s} {label[:34]:34s} {len(cert.divisors):3d} {qterms:7d} {qdeg:4d} "
            f"{cert.scale:6d} {unit:>5s} {cert.order}"
        )
    for e in report.entries:
        if "search_attempts" in e.details:
            worst = max(e.details["search_attempts"].values())
            print(f"order search in {e.name}: up to {worst} attempts")
    print("orders used:", dict(kinds))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--entry", action="append")
    a = ap.parse_args()
    main(set(a.entry) if a.entry else None)
