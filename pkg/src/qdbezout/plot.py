"""Plain SVG figures: domain boundary as the image of the real line, plus root markers."""
from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .poly import Polynomial
from .ratfun import RationalFunction
from .scalars import DOUBLE

DEFAULT_SAMPLES = 4096
COLORS = {"inside": "#d62728", "boundary": "#ff7f0e", "outside": "#1f77b4"}


def boundary_points(phi: RationalFunction, samples: int = DEFAULT_SAMPLES) -> np.ndarray:
    """``phi(tan theta)`` on a midpoint grid of ``(-pi/2, pi/2)``, closed with ``phi(inf)``."""
    phi = phi.to_mode(DOUBLE)
    theta = -np.pi / 2 + (np.arange(samples) + 0.5) * np.pi / samples
    t = np.tan(theta)
    num = np.polyval(phi.num.to_numpy()[::-1], t)
    den = np.polyval(phi.den.to_numpy()[::-1], t)
    w = num / den
    if phi.num.degree == phi.den.degree:
        w_inf = complex(phi.num.lead) / complex(phi.den.lead)
    else:
        w_inf = 0j  # numerator degree is lower (a pole at infinity is excluded upstream)
    return np.concatenate([[w_inf], w, [w_inf]])


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(phi: RationalFunction, roots=(), title: str = "",
               samples: int = DEFAULT_SAMPLES, size: int = 480) -> str:
    """SVG document; ``roots`` holds ``(root, multiplicity, classification)`` triples."""
    pts = boundary_points(phi, samples)
    allpts = list(pts) + [complex(r) for r, _, _ in roots]
    xs = np.array([z.real for z in allpts])
    ys = np.array([z.imag for z in allpts])
    x0, x1, y0, y1 = xs.min(), xs.max(), ys.min(), ys.max()
    span = max(x1 - x0, y1 - y0, 1e-12)
    pad = 0.08 * span
    scale = (size - 2.0) / (span + 2 * pad)
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2

    def xy(z):
        # y axis points up in the complex plane, down in SVG
        return _fmt(size / 2 + (z.real - cx) * scale), _fmt(size / 2 - (z.imag - cy) * scale)

    path = " ".join(("M" if k == 0 else "L") + "{},{}".format(*xy(z)) for k, z in enumerate(pts))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>{escape(title)}</title>",
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    # coordinate axes, when visible
    if x0 - pad <= 0 <= x1 + pad:
        ax = xy(complex(0, 0))[0]
        out.append(f'<line x1="{ax}" y1="0" x2="{ax}" y2="{size}" stroke="#cccccc" stroke-width="0.5"/>')
    if y0 - pad <= 0 <= y1 + pad:
        ay = xy(complex(0, 0))[1]
        out.append(f'<line x1="0" y1="{ay}" x2="{size}" y2="{ay}" stroke="#cccccc" stroke-width="0.5"/>')
    out.append(f'<path d="{path} Z" fill="#f2f2f2" stroke="black" stroke-width="1"/>')
    for r, m, cls in roots:
        px, py = xy(complex(r))
        out.append(f'<circle cx="{px}" cy="{py}" r="{3 + m}" fill="{COLORS[cls]}" '
                   f'class="root {cls}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_domain(phi: RationalFunction, p: Polynomial | None = None, title: str = "",
                samples: int = DEFAULT_SAMPLES, tol: float | None = None) -> str:
    from .oracles import MEMBERSHIP_TOL, root_membership
    roots = []
    if p is not None and p.degree >= 1:
        roots = root_membership(p, phi, MEMBERSHIP_TOL if tol is None else tol)
    return render_svg(phi, roots, title, samples)


def max_radial_deviation(points: np.ndarray, center: complex = 0j, radius: float = 1.0) -> float:
    return float(np.max(np.abs(np.abs(points - center) - radius)))


__all__ = ["boundary_points", "render_svg", "plot_domain", "max_radial_deviation"]
