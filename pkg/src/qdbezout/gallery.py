"""Named quadrature domains, each given by a rational map of the upper half-plane."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput
from .poly import Polynomial
from .ratfun import RationalFunction, compose_poly_ratfun
from .scalars import DOUBLE, EXACT, GaussRat

I = GaussRat(0, 1)


@dataclass(frozen=True)
class GalleryDomain:
    name: str
    phi: RationalFunction
    notes: str
    exact_capable: bool = True
    # poles of phi with multiplicities, when known in closed form
    poles: tuple | None = None


def _cayley(mode=EXACT) -> RationalFunction:
    return RationalFunction(Polynomial((-I, 1), EXACT), Polynomial((I, 1), EXACT)).to_mode(mode)


def _disc():
    return GalleryDomain("disc", _cayley(), "unit disc, Cayley map (z-i)/(z+i)",
                         poles=((-I, 1),))


def _cardioid():
    phi = compose_poly_ratfun(Polynomial((0, 3, 1), EXACT), _cayley())
    return GalleryDomain("cardioid", phi, "cardioid w^2 + 3w composed with the Cayley map",
                         poles=((-I, 2),))


def _neumann():
    num = Polynomial((15, 0, 15), EXACT)
    den = Polynomial((-6, 20 * I, 6), EXACT)
    return GalleryDomain("neumann", RationalFunction(num, den),
                         "Neumann oval 15(z^2+1)/(6z^2+20iz-6)",
                         poles=((GaussRat(0, -1) / 3, 1), (GaussRat(0, -3), 1)))


def _order3():
    # (z+i)^2 (z-i) * 63 over 28z^3 + 108iz^2 - 84z - 36i; two poles involve sqrt(3)
    num = Polynomial((I, 1), EXACT) ** 2 * Polynomial((-I, 1), EXACT)
    num = num.scale(63)
    den = Polynomial((-36 * I, -84, 108 * I, 28), EXACT)
    phi = RationalFunction(num.to_mode(DOUBLE), den.to_mode(DOUBLE))
    s = 2 * 3 ** 0.5 / 7
    poles = ((-3j, 1), (-s - 3j / 7, 1), (s - 3j / 7, 1))
    return GalleryDomain("order3", phi, "symmetric quadrature domain of order 3",
                         exact_capable=False, poles=poles)


_BUILDERS = {"disc": _disc, "cardioid": _cardioid, "neumann": _neumann, "order3": _order3}
NAMES = tuple(_BUILDERS)


def gallery_lookup(name: str) -> GalleryDomain:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise InvalidInput(f"unknown domain {name!r}; choose from {', '.join(NAMES)}") from None
