"""Worked germs, one per catalogue row, each paired with the record it must produce."""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from .degeneration import FibreTypeRecord, FirstOrderDatum, SmoothCaseDatum, table_record
from .degeneration.resolution import QuotientSingularity as QS
from .dualgraph import VERTEX_VERTEX, GraphAction
from .germfile import datum_document, dumps
from .intmat import Matrix, identity
from .mhs import ActionOnModel, CycleNCModel

FIXTURE_DIR = Path(__file__).parent / "data" / "fixtures"

A1 = QS(2, 1)

# order-N elements of SL2(Z), used on the last elliptic factor
_ROTATIONS = {
    1: ((1, 0), (0, 1)),
    2: ((-1, 0), (0, -1)),
    3: ((0, -1), (1, -1)),
    4: ((0, -1), (1, 0)),
    6: ((1, -1), (1, 0)),
}


@dataclass(frozen=True)
class Fixture:
    name: str
    datum: SmoothCaseDatum | FirstOrderDatum
    expected: FibreTypeRecord
    provenance: str

    def document(self) -> dict:
        return datum_document(self.datum, self.name, self.provenance)

    @property
    def filename(self) -> str:
        return self.name.replace("*", "star") + ".toml"


def h1_generator(n: int, order: int) -> Matrix:
    """Action on H^1 of E^n rotating the last factor and fixing the others."""
    rot = _ROTATIONS[order]
    mat = [list(row) for row in identity(2 * n)]
    x, y = n - 1, 2 * n - 1
    mat[x][x], mat[x][y] = rot[0]
    mat[y][x], mat[y][y] = rot[1]
    return tuple(tuple(r) for r in mat)


def _smooth(name, order_h, order_hbar, order_kernel, locus, provenance, n=2) -> Fixture:
    datum = SmoothCaseDatum(
        n=n,
        order_H=order_h,
        order_Hbar=order_hbar,
        order_Hbar_prime=order_kernel,
        fixed_locus=tuple(locus),
        h1_generator=h1_generator(n, order_hbar),
    )
    return Fixture(name, datum, table_record(name), provenance)


def _cycle_model(m: int, n: int) -> CycleNCModel:
    return CycleNCModel.translation(m, n - 1)


def _first_order(name, m, action, fixed_points, provenance, degree=1, n=2) -> Fixture:
    a = n - 1
    h1 = ActionOnModel(action.order, identity(2 * a) if a else (), action)
    datum = FirstOrderDatum(
        n=n,
        m=m,
        action=action,
        has_fixed_points=fixed_points,
        model=_cycle_model(m, n),
        fixed_locus_degree=degree,
        h1_action=h1,
    )
    return Fixture(name, datum, table_record(name), provenance)


# ---------------------------------------------------------------------------
# the two explicit constructions


def example_I0star5() -> Fixture:
    """E x E x disc x disc modulo Z/4 + Z/2.

    The Z/4 factor acts by (x, y, u1, u2) -> (-ix, y + 1/4, i u1, u2); its
    square fixes two pairs of points on the first factor, so after the kernel
    quotient the singular locus consists of two 2-sections of A1 points.
    """
    return _smooth(
        "I*_0-5", 8, 4, 2, [(2, A1)] * 2,
        "E x E x D x D / (Z/4 + Z/2); generator (x, y, u1, u2) -> (-ix, y + 1/4, i u1, u2)",
    )


def example_I0star5_negative() -> Fixture:
    """Same group orders, but four sections: lands on a different row."""
    good = example_I0star5()
    datum = replace(good.datum, fixed_locus=((1, A1),) * 4)
    return Fixture("I*_0-5", datum, good.expected, "negative control: four sections of A1 points")


def example_Imstar3(m: int) -> Fixture:
    """Cycle of 2m P^1-bundles with the order-four action phi = beta after alpha.

    alpha reflects the cycle through two vertices, beta shifts it by one; the
    composite reflection preserves two edges and acts without fixed points.
    The circuit automorphism of the model is a translation.
    """
    if m < 1:
        raise ValueError("m must be positive")
    alpha = GraphAction.reflection(2 * m, VERTEX_VERTEX)
    beta = GraphAction.rotation(2 * m, 1)
    phi = beta.compose(alpha)
    return _first_order(
        f"I*_{m}-3", 2 * m, phi, False,
        f"cycle of {2 * m} P^1-bundles glued along R_k = Spec C[u^(k+1) v^-1, u^-k v]; "
        "phi = beta o alpha, with alpha a vertex reflection and beta the unit shift",
    )


# ---------------------------------------------------------------------------
# catalogue


def _rows(m: int = 1, l: int = 2) -> list[Fixture]:
    q = QS
    return [
        _smooth(f"I_0-{l}", l, l, 1, [], f"free action of Z/{l} by a translation"),
        _smooth("I*_0-0", 2, 2, 2, [(1, A1)] * 4, "involution with four fixed sections"),
        _smooth("I*_0-2", 2, 2, 2, [(2, A1)] * 2, "involution fixing two 2-sections"),
        _smooth("I*_0-4", 2, 2, 2, [(4, A1)], "involution fixing one 4-section"),
        _smooth("I*_0-1", 4, 4, 2, [(1, A1)] * 4, "Z/4 whose square fixes four sections"),
        example_I0star5(),
        _smooth("I*_0-3", 6, 6, 2, [(1, A1)] * 4, "Z/6 whose cube fixes four sections"),
        _first_order(f"I*_{m}-0", 2 * m, GraphAction.reflection(2 * m, VERTEX_VERTEX), True,
                     "vertex reflection with fixed sections on both preserved components"),
        _first_order(f"I*_{m}-1", 2 * m, GraphAction.reflection(2 * m, VERTEX_VERTEX), True,
                     "vertex reflection with fixed 2-sections on both preserved components",
                     degree=2),
        _first_order(f"I*_{m}-2", 2 * m, GraphAction.reflection(2 * m, VERTEX_VERTEX), False,
                     "free vertex reflection composed with a half-period translation"),
        example_Imstar3(m),
        _smooth("II", 6, 6, 6, [(1, q(6, 1)), (1, q(3, 1)), (1, A1)], "Z/6, one point per stabiliser"),
        _smooth("II*", 6, 6, 6, [(1, q(6, 5)), (1, q(3, 2)), (1, A1)], "Z/6, Du Val stabilisers"),
        _smooth("III-0", 4, 4, 4, [(1, q(4, 1))] * 2 + [(1, A1)], "Z/4, two fixed sections"),
        _smooth("III-1", 4, 4, 4, [(2, q(4, 1)), (1, A1)], "Z/4, one fixed 2-section"),
        _smooth("III*-0", 4, 4, 4, [(1, q(4, 3))] * 2 + [(1, A1)], "Z/4 Du Val, two sections"),
        _smooth("III*-1", 4, 4, 4, [(2, q(4, 3)), (1, A1)], "Z/4 Du Val, one fixed 2-section"),
        _smooth("IV-0", 3, 3, 3, [(1, q(3, 1))] * 3, "Z/3, three fixed sections"),
        _smooth("IV-1", 3, 3, 3, [(3, q(3, 1))], "Z/3, one fixed 3-section"),
        _smooth("IV-2", 6, 6, 3, [(1, q(3, 1))] * 3, "Z/6 whose square fixes three sections"),
        _smooth("IV*-0", 3, 3, 3, [(1, q(3, 2))] * 3, "Z/3 Du Val, three fixed sections"),
        _smooth("IV*-1", 3, 3, 3, [(3, q(3, 2))], "Z/3 Du Val, one fixed 3-section"),
        _smooth("IV*-2", 6, 6, 3, [(1, q(3, 2))] * 3, "Z/6 Du Val, square fixes three sections"),
    ]


def catalog_all() -> list[Fixture]:
    """One fixture per catalogue row (parametric rows at m = 1, l = 2)."""
    return _rows()


def extended_catalog() -> list[Fixture]:
    """Other parameter values, plain cycles, a surface slice and a threefold base."""
    out = [f for f in _rows(m=2, l=3) if f.name.startswith(("I_0", "I*_2"))]
    out += [f for f in _rows(m=3, l=4) if f.name.startswith(("I_0", "I*_3"))]
    out.append(_smooth("I_0-6", 6, 6, 1, [], "free action of Z/6 by a translation"))
    out.append(_smooth("I_0", 1, 1, 1, [], "trivial group"))
    for m, k, name in ((5, 1, "I_1"), (6, 2, "I_2"), (9, 3, "I_3"), (8, 0, "I_8")):
        out.append(_first_order(name, m, GraphAction.rotation(m, k), False,
                                f"shift by {k} on a cycle of length {m}"))
    out.append(_smooth("II", 6, 6, 6, [(1, QS(6, 1)), (1, QS(3, 1)), (1, A1)],
                       "elliptic surface slice", n=1))
    out.append(_smooth("IV*-1", 3, 3, 3, [(3, QS(3, 2))], "abelian surface base", n=3))
    out.append(_first_order("I*_2-3", 4, example_Imstar3(2).datum.action, False,
                            "edge reflection over an abelian surface", n=3))
    return out


def write_fixture_files(directory: Path | str = FIXTURE_DIR) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for fx in catalog_all():
        path = directory / fx.filename
        path.write_text(dumps(fx.document()))
        paths.append(path)
    return paths
