"""Volume upper bounds computed from combinatorial counts."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import InvalidTripNumber
from .parent import total_iota
from .word import ModularLink

V_TET = 1.0149416064096536  # volume of the regular ideal tetrahedron

MODULAR = "modular"
LORENZ = "lorenz"


def quadratic_bound(nbar: int) -> float:
    if nbar < 1:
        raise InvalidTripNumber(f"trip number must be >= 1, got {nbar}")
    return 12 * V_TET * (nbar * nbar + 3 * nbar + 2)


def count_based_bound(iota: int) -> float:
    return 8 * V_TET * iota


def monotone_family_length(link: ModularLink) -> int | None:
    """n if the link is a knot x^{k1}y^c...x^{kn}y^c with k cyclically strictly
    monotone, else None.

    Words are stored in canonical rotation (largest k first), so an increasing
    family shows up as the maximum followed by a strictly increasing tail.
    """
    if len(link.words) != 1:
        return None
    w = link.words[0]
    ks, ls = w.ks, w.ls
    n = len(ks)
    if len(set(ls)) != 1:
        return None
    if n == 1:
        return 1
    decreasing = all(ks[i] > ks[i + 1] for i in range(n - 1))
    increasing = all(ks[i] < ks[i + 1] for i in range(1, n - 1)) and ks[0] > ks[-1]
    return n if decreasing or increasing else None


def linear_bound(link: ModularLink) -> float | None:
    n = monotone_family_length(link)
    return None if n is None else 8 * V_TET * (7 * n + 2)


@dataclass(frozen=True)
class BoundReport:
    nbar: int
    iota_total: int
    quadratic_bound: float
    count_based_bound: float
    linear_bound: float | None
    complement: str
    applicability_note: str

    def as_dict(self) -> dict:
        d = asdict(self)
        for k in ("quadratic_bound", "count_based_bound", "linear_bound"):
            if d[k] is not None:
                d[k] = round(d[k], 6)
        return d


def bound_report(link: ModularLink, lorenz: bool = False) -> BoundReport:
    iota = total_iota(link)
    lin = linear_bound(link)
    where = "the Lorenz link complement in S^3" if lorenz else "the modular link complement"
    note = f"upper bounds on the hyperbolic volume of {where}"
    if lin is None:
        note += "; linear bound not applicable (needs a knot with constant y-exponent and monotone x-exponents)"
    return BoundReport(
        nbar=link.nbar,
        iota_total=iota,
        quadratic_bound=quadratic_bound(link.nbar),
        count_based_bound=count_based_bound(iota),
        linear_bound=lin,
        complement=LORENZ if lorenz else MODULAR,
        applicability_note=note,
    )
