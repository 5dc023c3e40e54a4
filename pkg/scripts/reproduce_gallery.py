"""Inertia table for the gallery domains and the two reference polynomials.

    python scripts/reproduce_gallery.py [--mode auto|exact|double] [--json]
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass

from qdbezout.counting import count_zeros_in_domain
from qdbezout.errors import AmbiguousRankError
from qdbezout.gallery import NAMES, gallery_lookup
from qdbezout.oracles import membership_count
from qdbezout.poly import Polynomial
from qdbezout.scalars import DOUBLE, EXACT

POLYS = {"p": [-4, 3, -2, 5, 1], "q": [-4, 0, 1]}


@dataclass
class GalleryConfig:
    mode: str = "auto"
    rank_tol: float = 1e-9


@dataclass
class Row:
    domain: str
    poly: str
    mode: str
    size: int
    inertia: tuple
    interior_additional: int
    interior: int
    membership: tuple
    seconds: float
    ambiguous: bool = False


def run(cfg: GalleryConfig):
    rows = []
    for name in NAMES:
        g = gallery_lookup(name)
        mode = cfg.mode
        if mode == "auto":
            mode = EXACT if g.exact_capable else DOUBLE
        if mode == EXACT and not g.exact_capable:
            continue
        for label, coeffs in POLYS.items():
            p = Polynomial(coeffs)
            start = time.perf_counter()
            try:
                rep = count_zeros_in_domain(p, g.phi, mode, cfg.rank_tol, strict=True)
                ambiguous = False
            except AmbiguousRankError:
                rep = count_zeros_in_domain(p, g.phi, mode, cfg.rank_tol)
                ambiguous = True
            rows.append(Row(name, label, rep.mode, sum(rep.inertia), rep.inertia,
                            rep.interior_additional, rep.interior, membership_count(p, g.phi),
                            time.perf_counter() - start, ambiguous))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mode", choices=["auto", EXACT, DOUBLE], default="auto")
    ap.add_argument("--rank-tol", type=float, default=1e-9)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = run(GalleryConfig(args.mode, args.rank_tol))
    if args.json:
        print(json.dumps([asdict(r) for r in rows], indent=2))
        return
    head = f"{'domain':9} {'poly':4} {'mode':6} {'N':>3} {'inertia':>12} {'add':>4} {'int':>4} " \
           f"{'membership':>11} {'sec':>6}"
    print(head)
    print("-" * len(head))
    for r in rows:
        flag = " ambiguous" if r.ambiguous else ""
        print(f"{r.domain:9} {r.poly:4} {r.mode:6} {r.size:3d} {str(r.inertia):>12} "
              f"{r.interior_additional:4d} {r.interior:4d} {str(r.membership):>11} "
              f"{r.seconds:6.2f}{flag}")


if __name__ == "__main__":
    main()
