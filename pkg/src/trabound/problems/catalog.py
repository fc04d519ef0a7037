"""Coordinate maps and potential classes admitted by the Bessel and Jacobi
bases, as structured data.

Rows are addressed by ``(table, row)``, with 1-based row numbers in the
order the classes are usually listed:

* table 1: Bessel coordinate maps (4 rows), dy/dx = lambda y^{-a}
* table 2: Bessel potential classes (7 rows)
* table 4: Jacobi coordinate maps (8 rows), dy/dx = lambda (y-1)^a (y+1)^{-b}
* table 5: Jacobi potential classes with g ~ (y-1)^{2a-1}(y+1)^{-2b-1} (6 rows)
* table 6: Jacobi potential classes with shifted g (10 rows; rows 6-10 are
  the reflections of rows 1-5)

Templates give U(y) = 2V/lambda^2 with free parameters A, B, C, D. Energy
constraints (fixed 2E/lambda^2) are recorded as strings and left to callers.

Some maps run "backwards": y grows as x decreases. Those rows carry
``orientation = -1`` so that dy/dx = orientation * lambda * w(y). For the
(1, -1/2) Jacobi map the branch x in (-inf, 0) is stored; the mirror branch
x in (0, inf) has orientation -1. Rows without an explicit lambda-bar use
lambda-bar = lambda.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from trabound.errors import UnknownRowError

INF = math.inf


@dataclass(frozen=True)
class CoordinateMap:
    map_id: str
    basis: str
    a: Fraction
    b: Fraction | None
    expression: str
    x_minus: float
    x_plus: float
    lambda_bar: str  # lambda-bar as a multiple of lambda, e.g. "lambda/2"
    lambda_bar_factor: float
    orientation: int
    integration_constant: float | None
    func: Callable[[float, float], float]  # (x, lam) -> y

    def y(self, x: float, lam: float = 1.0) -> float:
        return self.func(x, lam)

    def weight(self, y: float) -> float:
        """w(y) in dy/dx = lambda * w(y)."""
        if self.basis == "Bessel":
            return y ** (-float(self.a))
        return (y - 1.0) ** float(self.a) * (y + 1.0) ** (-float(self.b))

    @property
    def y_minus(self) -> float:
        return 0.0 if self.basis == "Bessel" else 1.0

    @property
    def y_plus(self) -> float:
        return INF


@dataclass(frozen=True)
class CatalogEntry:
    table: int
    row: int
    basis: str
    a: Fraction
    b: Fraction | None
    coord: CoordinateMap
    g_factor: str | None  # -2 g(y) / lambda^2
    potential: str | None
    potential_func: Callable[..., float] | None  # U(y, A, B, C, D)
    energy_constraint: str | None
    mirror_of: int | None = None  # table-6 bottom rows: linked top row

    @property
    def key(self) -> str:
        return f"T{self.table}R{self.row}"

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "row": self.row,
            "basis": self.basis,
            "a": str(self.a),
            "b": None if self.b is None else str(self.b),
            "map_id": self.coord.map_id,
            "y_of_x": self.coord.expression,
            "x_minus": _fmt_limit(self.coord.x_minus),
            "x_plus": _fmt_limit(self.coord.x_plus),
            "lambda_bar": self.coord.lambda_bar,
            "orientation": self.coord.orientation,
            "integration_constant": self.coord.integration_constant,
            "g_factor": self.g_factor,
            "potential": self.potential,
            "energy_constraint": self.energy_constraint,
            "mirror_of": self.mirror_of,
        }


def _fmt_limit(v: float) -> str:
    if v == INF:
        return "inf"
    if v == -INF:
        return "-inf"
    if abs(v - math.pi / 2.0) < 1e-15:
        return "pi/(2*lambda_bar)"
    return repr(v)


F = Fraction
H = Fraction(1, 2)

# --- coordinate maps -------------------------------------------------------

_BESSEL_MAPS = {
    F(-1, 2): CoordinateMap(
        "B:a=-1/2", "Bessel", F(-1, 2), None, "(lambda*x/2)^2", 0.0, INF,
        "lambda", 1.0, 1, 0.0, lambda x, l: (l * x / 2.0) ** 2,
    ),
    F(-1): CoordinateMap(
        "B:a=-1", "Bessel", F(-1), None, "exp(lambda*x)", -INF, INF,
        "lambda", 1.0, 1, None, lambda x, l: math.exp(l * x),
    ),
    F(-3, 2): CoordinateMap(
        "B:a=-3/2", "Bessel", F(-3, 2), None, "(2/(lambda*x))^2", INF, 0.0,
        "lambda", 1.0, -1, 0.0, lambda x, l: (2.0 / (l * x)) ** 2,
    ),
    F(-2): CoordinateMap(
        "B:a=-2", "Bessel", F(-2), None, "1/(lambda*x)", INF, 0.0,
        "lambda", 1.0, -1, 0.0, lambda x, l: 1.0 / (l * x),
    ),
}


def _coth_sq_map(x: float, l: float) -> float:
    t = math.tanh(-l / math.sqrt(2.0) * x)
    return 2.0 / (t * t) - 1.0


_JACOBI_MAPS = {
    (H, -H): CoordinateMap(
        "J:(1/2,-1/2)", "Jacobi", H, -H, "cosh(lambda*x)", 0.0, INF,
        "lambda", 1.0, 1, None, lambda x, l: math.cosh(l * x),
    ),
    (H, F(0)): CoordinateMap(
        "J:(1/2,0)", "Jacobi", H, F(0), "(lambda_bar*x)^2 + 1", 0.0, INF,
        "lambda/2", 0.5, 1, None, lambda x, l: (l / 2.0 * x) ** 2 + 1.0,
    ),
    (F(0), -H): CoordinateMap(
        "J:(0,-1/2)", "Jacobi", F(0), -H, "2*(1 + lambda_bar*x)^2 - 1", 0.0, INF,
        "lambda/(2*sqrt(2))", 1.0 / (2.0 * math.sqrt(2.0)), 1, None,
        lambda x, l: 2.0 * (1.0 + l / (2.0 * math.sqrt(2.0)) * x) ** 2 - 1.0,
    ),
    (F(1), -H): CoordinateMap(
        "J:(1,-1/2)", "Jacobi", F(1), -H, "2/tanh(-lambda_bar*x)^2 - 1", -INF, 0.0,
        "lambda/sqrt(2)", 1.0 / math.sqrt(2.0), 1, None, _coth_sq_map,
    ),
    (H, F(-1)): CoordinateMap(
        "J:(1/2,-1)", "Jacobi", H, F(-1), "2*tan(lambda_bar*x)^2 + 1", 0.0, math.pi / 2.0,
        "lambda/sqrt(2)", 1.0 / math.sqrt(2.0), 1, None,
        lambda x, l: 2.0 * math.tan(l / math.sqrt(2.0) * x) ** 2 + 1.0,
    ),
    (F(1), F(0)): CoordinateMap(
        "J:(1,0)", "Jacobi", F(1), F(0), "exp(lambda*x) + 1", -INF, INF,
        "lambda", 1.0, 1, None, lambda x, l: math.exp(l * x) + 1.0,
    ),
    (F(0), F(-1)): CoordinateMap(
        "J:(0,-1)", "Jacobi", F(0), F(-1), "2*exp(lambda*x) - 1", 0.0, INF,
        "lambda", 1.0, 1, None, lambda x, l: 2.0 * math.exp(l * x) - 1.0,
    ),
    (F(1), F(-1)): CoordinateMap(
        "J:(1,-1)", "Jacobi", F(1), F(-1), "-1/tanh(lambda*x)", -INF, 0.0,
        "lambda", 1.0, 1, None, lambda x, l: -1.0 / math.tanh(l * x),
    ),
}

# the (1/2,-1) map's right end is pi/(2 lambda_bar); stored in units where
# lambda_bar = 1 and rescaled by x_range()


def x_range(coord: CoordinateMap, lam: float) -> tuple[float, float]:
    """Physical (x_minus, x_plus) for a given lambda."""
    lo, hi = coord.x_minus, coord.x_plus
    if coord.map_id == "J:(1/2,-1)":
        hi = math.pi / (2.0 * lam * coord.lambda_bar_factor)
    return lo, hi


# --- potential classes -----------------------------------------------------

_T2 = [
    (F(-1, 2), "1/y", "(1/4)/y^3 + C/y^2 + B/y", lambda y, A, B, C, D: 0.25 / y**3 + C / y**2 + B / y, None),
    (F(-1), "1", "(1/4)/y^2 + C/y + A*y", lambda y, A, B, C, D: 0.25 / y**2 + C / y + A * y, None),
    (F(-3, 2), "y", "(1/4)/y + A*y^2 + B*y", lambda y, A, B, C, D: 0.25 / y + A * y**2 + B * y, "-mu"),
    (F(-2), "y^2", "A*y^3 + B*y^2 + C*y", lambda y, A, B, C, D: A * y**3 + B * y**2 + C * y, "-1/4"),
    (F(-1), "1/y", "(1/4)/y^2 + B/y", lambda y, A, B, C, D: 0.25 / y**2 + B / y, None),
    (F(-3, 2), "1", "(1/4)/y + A*y", lambda y, A, B, C, D: 0.25 / y + A * y, None),
    (F(-2), "y", "A*y^2 + B*y", lambda y, A, B, C, D: A * y**2 + B * y, "-1/4"),
]

_T5 = [
    ((H, -H), "1", "(C/2)/(y-1) - (D/2)/(y+1) + A*(y-1) + B*(y+1)",
     lambda y, A, B, C, D: C / 2 / (y - 1) - D / 2 / (y + 1) + A * (y - 1) + B * (y + 1), None),
    ((H, F(0)), "1/(y+1)", "(C/2)/(y^2-1) - (D/2)/(y+1)^2 + A*(y-1)/(y+1)",
     lambda y, A, B, C, D: C / 2 / (y * y - 1) - D / 2 / (y + 1) ** 2 + A * (y - 1) / (y + 1), None),
    ((F(0), -H), "1/(y-1)", "(C/2)/(y-1)^2 - (D/2)/(y^2-1) + B*(y+1)/(y-1)",
     lambda y, A, B, C, D: C / 2 / (y - 1) ** 2 - D / 2 / (y * y - 1) + B * (y + 1) / (y - 1), None),
    ((F(1), -H), "y-1", "D/(y+1) + A*(y-1)^2 + B*(y^2-1)",
     lambda y, A, B, C, D: D / (y + 1) + A * (y - 1) ** 2 + B * (y * y - 1), "-mu^2/2"),
    ((H, F(-1)), "y+1", "C/(y-1) + A*(y^2-1) + B*(y+1)^2",
     lambda y, A, B, C, D: C / (y - 1) + A * (y * y - 1) + B * (y + 1) ** 2, "nu^2/2"),
    ((F(1), F(-1)), "y^2-1", "((C-D)/2)*y + (y^2-1)*(A*(y-1) + B*(y+1))",
     lambda y, A, B, C, D: (C - D) / 2 * y + (y * y - 1) * (A * (y - 1) + B * (y + 1)), "-(mu^2+nu^2)/2"),
]

_T6 = [
    ((F(1), -H), "1", "D/(y+1) + A*(y-1) + B*(y+1)",
     lambda y, A, B, C, D: D / (y + 1) + A * (y - 1) + B * (y + 1), None),
    ((H, -H), "1/(y-1)", "D/(y^2-1) + B*(y+1)/(y-1)",
     lambda y, A, B, C, D: D / (y * y - 1) + B * (y + 1) / (y - 1), None),
    ((F(1), F(0)), "1/(y+1)", "D/(y+1)^2 + A*(y-1)/(y+1)",
     lambda y, A, B, C, D: D / (y + 1) ** 2 + A * (y - 1) / (y + 1), None),
    ((F(1), F(-1)), "y+1", "A*(y^2-1) + B*(y+1)^2",
     lambda y, A, B, C, D: A * (y * y - 1) + B * (y + 1) ** 2, "-nu^2"),
    ((H, F(-1)), "(y+1)/(y-1)", "A*(y+1) + B*(y+1)^2/(y-1)",
     lambda y, A, B, C, D: A * (y + 1) + B * (y + 1) ** 2 / (y - 1), "nu^2/2"),
    ((H, F(-1)), "1", "C/(y-1) + A*(y-1) + B*(y+1)",
     lambda y, A, B, C, D: C / (y - 1) + A * (y - 1) + B * (y + 1), None),
    ((H, -H), "1/(y+1)", "C/(y^2-1) + A*(y-1)/(y+1)",
     lambda y, A, B, C, D: C / (y * y - 1) + A * (y - 1) / (y + 1), None),
    ((F(0), F(-1)), "1/(y-1)", "C/(y-1)^2 + B*(y+1)/(y-1)",
     lambda y, A, B, C, D: C / (y - 1) ** 2 + B * (y + 1) / (y - 1), None),
    ((F(1), F(-1)), "y-1", "A*(y-1)^2 + B*(y^2-1)",
     lambda y, A, B, C, D: A * (y - 1) ** 2 + B * (y * y - 1), "-mu^2"),
    ((F(1), -H), "(y-1)/(y+1)", "A*(y-1)^2/(y+1) + B*(y-1)",
     lambda y, A, B, C, D: A * (y - 1) ** 2 / (y + 1) + B * (y - 1), "-mu^2/2"),
]

TABLE_SIZES = {1: 4, 2: 7, 4: 8, 5: 6, 6: 10}


def _build() -> dict[tuple[int, int], CatalogEntry]:
    out: dict[tuple[int, int], CatalogEntry] = {}
    for i, a in enumerate([F(-1, 2), F(-1), F(-3, 2), F(-2)], start=1):
        out[(1, i)] = CatalogEntry(1, i, "Bessel", a, None, _BESSEL_MAPS[a], None, None, None, None)
    for i, (a, g, pot, fn, ec) in enumerate(_T2, start=1):
        out[(2, i)] = CatalogEntry(2, i, "Bessel", a, None, _BESSEL_MAPS[a], g, pot, fn, ec)
    for i, key in enumerate(_JACOBI_MAPS, start=1):
        a, b = key
        out[(4, i)] = CatalogEntry(4, i, "Jacobi", a, b, _JACOBI_MAPS[key], None, None, None, None)
    for i, ((a, b), g, pot, fn, ec) in enumerate(_T5, start=1):
        out[(5, i)] = CatalogEntry(5, i, "Jacobi", a, b, _JACOBI_MAPS[(a, b)], g, pot, fn, ec)
    for i, ((a, b), g, pot, fn, ec) in enumerate(_T6, start=1):
        mirror = i - 5 if i > 5 else None
        out[(6, i)] = CatalogEntry(6, i, "Jacobi", a, b, _JACOBI_MAPS[(a, b)], g, pot, fn, ec, mirror)
    return out


CATALOG: dict[tuple[int, int], CatalogEntry] = _build()


def catalog_lookup(basis: str, table: int, row: int) -> CatalogEntry:
    """Entry ``row`` (1-based) of ``table`` for the given basis."""
    entry = CATALOG.get((int(table), int(row)))
    if entry is None or entry.basis.lower() != str(basis).lower():
        raise UnknownRowError(f"no {basis} row {row} in table {table}")
    return entry


def find_entry(basis: str, table: int, a, b=None) -> CatalogEntry:
    """First entry of ``table`` with exponents (a, b)."""
    a = Fraction(a)
    b = None if b is None else Fraction(b)
    for (t, _), e in sorted(CATALOG.items()):
        if t == table and e.basis.lower() == basis.lower() and e.a == a and e.b == b:
            return e
    raise UnknownRowError(f"no {basis} entry with a={a}, b={b} in table {table}")


def catalog_entries() -> list[CatalogEntry]:
    return [CATALOG[k] for k in sorted(CATALOG)]


def sample_points(coord: CoordinateMap, lam: float, count: int = 20) -> list[float]:
    """Interior x samples away from the endpoints."""
    lo, hi = x_range(coord, lam)
    lo, hi = min(lo, hi), max(lo, hi)
    if math.isinf(lo) and math.isinf(hi):
        lo, hi = -2.0 / lam, 2.0 / lam
    elif math.isinf(lo):
        lo, hi = hi - 3.0 / lam, hi - 0.05 / lam
    elif math.isinf(hi):
        lo, hi = lo + 0.05 / lam, lo + 3.0 / lam
    else:
        width = hi - lo
        lo, hi = lo + 0.02 * width, hi - 0.02 * width
    return [lo + (hi - lo) * (i + 0.5) / count for i in range(count)]


def derivative_check(entry: CatalogEntry, lam: float = 1.3, count: int = 20) -> float:
    """Worst relative mismatch of numerical dy/dx against orientation*lambda*w(y)."""
    coord = entry.coord
    lo, hi = x_range(coord, lam)
    finite_ends = [v for v in (lo, hi) if math.isfinite(v)]
    worst = 0.0
    for x in sample_points(coord, lam, count):
        # keep the stencil well inside the distance to any singular endpoint
        reach = min([1.0 / lam] + [abs(x - v) for v in finite_ends])
        h = 2e-3 * reach
        f = lambda t: coord.y(t, lam)
        num = (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)
        exact = coord.orientation * lam * coord.weight(coord.y(x, lam))
        worst = max(worst, abs(num - exact) / max(abs(exact), 1e-300))
    return worst


def mirror_check(entry: CatalogEntry, samples: int = 7) -> float:
    """Reflect a bottom table-6 row onto its linked top row.

    Under y -> -y, (a, b) -> (-b, -a), A <-> B, C <-> D and V -> (-1)^{2(a+b)} V
    the reflected template must equal the linked row's template. Returns
    the worst absolute mismatch over sampled y and parameters.
    """
    if entry.mirror_of is None:
        raise UnknownRowError(f"{entry.key} has no mirror link")
    top = CATALOG[(6, entry.mirror_of)]
    if (top.a, top.b) != (-entry.b, -entry.a):
        return math.inf
    sgn = (-1) ** int(2 * (entry.a + entry.b))
    params = [(0.7, -1.3, 2.1, 0.4), (-0.2, 0.9, -1.7, 3.3), (1.5, 2.5, 0.3, -0.8)]
    worst = 0.0
    for A, B, C, D in params:
        for i in range(samples):
            y = 1.3 + 0.9 * i
            lhs = top.potential_func(y, A, B, C, D)
            rhs = sgn * entry.potential_func(-y, B, A, D, C)
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return worst


def export_catalog(fmt: str) -> str:
    """Serialise the whole catalog as ``json`` or ``csv`` text."""
    rows = [e.to_dict() for e in catalog_entries()]
    if fmt == "json":
        return json.dumps({"schema": "trabound.catalog/1", "rows": rows}, indent=2) + "\n"
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: "" if v is None else v for k, v in r.items()})
        return buf.getvalue()
    raise ValueError(f"unknown catalog format {fmt!r}")
