"""Random-polynomial sweep: inertia counts against direct root membership.

Reports, per domain and arithmetic mode, the mismatch count, the number of
ambiguous-rank refusals and the number of boundary cases skipped.

    python scripts/oracle_sweep.py --n 50 --seed 12345 --modes exact double
"""
import argparse
import time
from dataclasses import dataclass, field

import numpy as np

from qdbezout.counting import count_zeros_in_domain
from qdbezout.errors import AmbiguousRankError
from qdbezout.gallery import NAMES, gallery_lookup
from qdbezout.oracles import membership_count
from qdbezout.poly import Polynomial
from qdbezout.scalars import DOUBLE, EXACT


@dataclass
class SweepConfig:
    n: int = 50
    seed: int = 12345
    max_degree: int = 5
    coeff_bound: int = 5
    rank_tol: float = 1e-9
    modes: list = field(default_factory=lambda: [EXACT, DOUBLE])
    domains: list = field(default_factory=lambda: list(NAMES))


def random_polys(cfg: SweepConfig, phi):
    """``cfg.n`` integer polynomials with no root on the boundary of ``phi(H)``."""
    rng = np.random.default_rng(cfg.seed)
    out, skipped = [], 0
    while len(out) < cfg.n:
        deg = int(rng.integers(1, cfg.max_degree + 1))
        c = [int(x) for x in rng.integers(-cfg.coeff_bound, cfg.coeff_bound + 1, size=deg + 1)]
        c[-1] = c[-1] or 1
        p = Polynomial(c)
        inside, boundary, _ = membership_count(p, phi)
        if boundary:
            skipped += 1
            continue
        out.append((p, inside))
    return out, skipped


def sweep(cfg: SweepConfig):
    results = []
    for name in cfg.domains:
        g = gallery_lookup(name)
        cases, skipped = random_polys(cfg, g.phi)
        for mode in cfg.modes:
            if mode == EXACT and not g.exact_capable:
                continue
            bad = amb = 0
            start = time.perf_counter()
            for p, inside in cases:
                try:
                    rep = count_zeros_in_domain(p, g.phi, mode, cfg.rank_tol, strict=True)
                except AmbiguousRankError:
                    amb += 1
                    continue
                bad += rep.interior != inside
            results.append((name, mode, len(cases), bad, amb, skipped,
                            time.perf_counter() - start))
    return results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=50)
    ap.add_argument("--seed", type=int, default=12345)
    ap.add_argument("--rank-tol", type=float, default=1e-9)
    ap.add_argument("--modes", nargs="+", choices=[EXACT, DOUBLE], default=[EXACT, DOUBLE])
    args = ap.parse_args()
    cfg = SweepConfig(n=args.n, seed=args.seed, rank_tol=args.rank_tol, modes=args.modes)
    print(f"{'domain':9} {'mode':6} {'cases':>5} {'mismatch':>8} {'ambiguous':>9} "
          f"{'skipped':>7} {'sec':>6}")
    for name, mode, n, bad, amb, skipped, sec in sweep(cfg):
        print(f"{name:9} {mode:6} {n:5d} {bad:8d} {amb:9d} {skipped:7d} {sec:6.2f}")


if __name__ == "__main__":
    main()
