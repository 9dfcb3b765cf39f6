"""Run the identity catalog, save the report and every certificate, print a timing table."""

import argparse
import json
import re
from dataclasses import asdict, dataclass
from pathlib import Path

from edwardsproof.identities import run_all


@dataclass
class CatalogRun:
    out: str = "results/catalog"
    seed: int = 0
    trials: int = 100
    skip_tform: bool = False


def main(cfg: CatalogRun):
    report = run_all(include_tform=not cfg.skip_tform, trials=cfg.trials, seed=cfg.seed)
    out = Path(cfg.out)
    (out / "certs").mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(report.to_json(timings=True))
    (out / "config.json").write_text(json.dumps(asdict(cfg), indent=2))
    for entry, label, cert in report.certificates():
        slug = re.sub(r"[^A-Za-z0-9_.+-]+", "_", label).strip("_")
        (out / "certs" / f"{entry}__{slug}.json").write_text(cert.to_json())
    print(f"{'entry':28s} {'status':6s} {'certs':>5s} {'seconds':>8s}")
    for e in report.entries:
        print(f"{e.name:28s} {e.status:6s} {len(e.certificates):5d} {e.wall_time:8.3f}")
    print(f"{'total':28s} {report.status:6s} {len(report.certificates()):5d} {report.wall_time:8.3f}")
    return 0 if report.status == "PASS" else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=CatalogRun.out)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--skip-tform", action="store_true")
    a = ap.parse_args()
    raise SystemExit(main(CatalogRun(a.out, a.seed, a.trials, a.skip_tform)))
