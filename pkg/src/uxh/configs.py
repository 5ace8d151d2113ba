"""Catalog of point configurations and arrangement-dual constructions.

Every configuration is a finite list of projective points with exact
coordinates, normalized so the last nonzero coordinate is 1.  Root-system
entries store one point per antipodal root pair.  The D4 and H4 entries are
built from the standard realizations (see README), the others from explicit
coordinate lists.
"""

from .field import Field, FieldError
from .poly import MultiPoly

CATALOG_NAMES = ("B3", "B4", "D4", "F4", "H3", "H4",
                 "fermat0", "fermat3", "extended-fermat")


def normalize_point(field: Field, coords) -> tuple:
    """Scale so the last nonzero coordinate becomes 1."""
    vals = [field.element(c) for c in coords]
    last = None
    for i in range(len(vals) - 1, -1, -1):
        if not field.is_zero(vals[i]):
            last = i
            break
    if last is None:
        raise FieldError("invalid projective point: all coordinates zero")
    inv = field.inv(vals[last])
    return tuple(field.mul(v, inv) for v in vals)


class PointConfiguration:
    """Named finite set of projective points over one field handle."""

    def __init__(self, name: str, field: Field, nvars: int, points,
                 source=None):
        self.name = name
        self.field = field
        self.nvars = nvars
        normalized = [normalize_point(field, p) for p in points]
        seen = {}
        for i, p in enumerate(normalized):
            if p in seen:
                raise FieldError(
                    f"duplicate point in {name!r}: index {seen[p]} equals {i}")
            seen[p] = i
        self.points = normalized
        self.source = source if source is not None else (
            "raw", [[field.fmt(c) for c in p] for p in normalized])

    @property
    def N(self) -> int:
        return self.nvars - 1

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"<{self.name}: {len(self.points)} points in P^{self.N}>"

    def over(self, field: Field) -> "PointConfiguration":
        """The same configuration rebuilt over another field."""
        kind = self.source[0]
        if kind == "catalog":
            _, name, m = self.source
            return catalog(name, field, m=m)
        _, raw = self.source
        pts = [[field.parse(c) for c in p] for p in raw]
        return PointConfiguration(self.name, field, self.nvars, pts,
                                  source=("raw", raw))

    def to_json(self) -> dict:
        return {"name": self.name, "N": self.N,
                "points": [[self.field.fmt(c) for c in p] for p in self.points]}


def config_requirements(name: str, m=None) -> dict:
    """Field constants a catalog entry needs: {'golden': bool, 'zeta': m|None}."""
    key = name.strip()
    low = key.lower()
    if low in ("h3", "h4"):
        return {"golden": True, "zeta": None}
    if low in ("fermat0", "fermat3"):
        if m is None:
            raise FieldError(f"{name} needs the parameter m")
        return {"golden": False, "zeta": m if m >= 3 else None}
    if low == "extended-fermat":
        return {"golden": False, "zeta": 4}
    if low in ("b3", "b4", "d4", "f4"):
        return {"golden": False, "zeta": None}
    raise FieldError(f"unknown catalog name {name!r}; choices: {CATALOG_NAMES}")


def coordinate_points(nvars: int):
    return [tuple(1 if j == i else 0 for j in range(nvars))
            for i in range(nvars)]


def _b3_points():
    pts = coordinate_points(3)
    for i in range(3):
        for j in range(i + 1, 3):
            for s in (1, -1):
                p = [0, 0, 0]
                p[i], p[j] = 1, s
                pts.append(tuple(p))
    return pts


def _b4_points():
    pts = coordinate_points(4)
    for s in (1, -1):
        for i in range(4):
            for j in range(i + 1, 4):
                p = [0, 0, 0, 0]
                p[i], p[j] = 1, s
                pts.append(tuple(p))
    return pts


def _d4_points():
    return _b4_points()[4:]


def _f4_points():
    pts = _b4_points()
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                pts.append((1, s1, s2, s3))
    return pts


def _h3_points(field: Field):
    u = field.golden_ratio()
    u2 = field.mul(u, u)
    one = field.one
    n = field.neg
    return [
        (one, 0, 0), (0, one, 0), (0, 0, one),
        (one, u, u2), (n(one), u, u2), (one, n(u), u2), (one, u, n(u2)),
        (u, n(u2), one), (n(u), u2, one), (u, u2, n(one)), (u, u2, one),
        (u2, one, n(u)), (u2, n(one), u), (n(u2), one, u), (u2, one, u),
    ]


_EVEN_PERMS_4 = [
    (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2),
    (1, 0, 3, 2), (1, 2, 0, 3), (1, 3, 2, 0),
    (2, 0, 1, 3), (2, 1, 3, 0), (2, 3, 0, 1),
    (3, 0, 2, 1), (3, 1, 0, 2), (3, 2, 1, 0),
]


def _h4_points(field: Field):
    """One point per antipodal root pair: 4 axes, 8 diagonals, 48 from even
    permutations of (u, 1, u-1, 0)."""
    u = field.golden_ratio()
    v = field.sub(u, field.one)  # 1/u
    pts = list(coordinate_points(4))
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                pts.append((1, s1, s2, s3))
    base = (u, field.one, v, field.zero)
    seen = set()
    for perm in _EVEN_PERMS_4:
        vec = tuple(base[perm.index(i)] for i in range(4))
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    signs = iter((s1, s2, s3))
                    cand = tuple(field.element(0) if field.is_zero(c)
                                 else (c if next(signs) == 1 else field.neg(c))
                                 for c in vec)
                    cand = normalize_point(field, cand)
                    if cand not in seen:
                        seen.add(cand)
                        pts.append(cand)
    return pts


def fermat_arrangement_factors(field: Field, m: int, nvars: int = 3) -> list:
    """Linear factors of the arrangement whose duals form the configuration.

    nvars=3: the 3m factors of (x^m - y^m)(y^m - z^m)(z^m - x^m).
    nvars=4: the 28 factors xyzw and v_i - zeta4^k v_j for i < j.
    """
    if nvars == 3:
        eps = field.root_of_unity(m) if m >= 2 else field.one
        factors = []
        for (i, j) in ((0, 1), (1, 2), (2, 0)):
            for alpha in range(m):
                coeffs = {}
                ei = tuple(1 if k == i else 0 for k in range(3))
                ej = tuple(1 if k == j else 0 for k in range(3))
                coeffs[ei] = field.one
                coeffs[ej] = field.neg(field.pow(eps, alpha))
                factors.append(MultiPoly(field, 3, coeffs))
        return factors
    if nvars == 4:
        if m != 4:
            raise FieldError("the extended arrangement is defined for m = 4")
        zeta = field.root_of_unity(4)
        factors = [MultiPoly.variable(field, 4, i) for i in range(4)]
        for i in range(4):
            for j in range(i + 1, 4):
                for k in range(4):
                    coeffs = {
                        tuple(1 if t == i else 0 for t in range(4)): field.one,
                        tuple(1 if t == j else 0 for t in range(4)):
                            field.neg(field.pow(zeta, k))}
                    factors.append(MultiPoly(field, 4, coeffs))
        return factors
    raise FieldError("arrangements live in 3 or 4 variables")


def dual_points(name: str, field: Field, factors) -> PointConfiguration:
    """One point per linear factor, coordinates = the factor's coefficients."""
    pts = []
    nvars = None
    for f in factors:
        if f.is_zero() or f.homogeneous_degree() != 1:
            raise FieldError("dual_points expects nonzero linear forms")
        nvars = f.nvars
        vec = [field.element(0)] * nvars
        for exps, c in f.coeffs.items():
            vec[exps.index(1)] = c
        pts.append(vec)
    dedup = []
    seen = set()
    for p in pts:
        q = normalize_point(field, p)
        if q not in seen:
            seen.add(q)
            dedup.append(q)
    return PointConfiguration(name, field, nvars, dedup)


def catalog(name: str, field: Field, m=None) -> PointConfiguration:
    """Build a named configuration over the given field."""
    low = name.strip().lower()
    if ":" in low:
        base, _, tail = low.partition(":")
        if m is None:
            try:
                m = int(tail)
            except ValueError:
                raise FieldError(f"bad parameter in {name!r}; use e.g. fermat3:5")
        low = base
    if low in ("fermat0", "fermat3") and (m is None or m < 1):
        raise FieldError(f"{name} needs a parameter m >= 1")
    if low == "b3":
        pts, nvars, label = _b3_points(), 3, "B3"
    elif low == "b4":
        pts, nvars, label = _b4_points(), 4, "B4"
    elif low == "d4":
        pts, nvars, label = _d4_points(), 4, "D4"
    elif low == "f4":
        pts, nvars, label = _f4_points(), 4, "F4"
    elif low == "h3":
        pts, nvars, label = _h3_points(field), 3, "H3"
    elif low == "h4":
        pts, nvars, label = _h4_points(field), 4, "H4"
    elif low in ("fermat0", "fermat3"):
        cfg = dual_points(f"fermat0:{m}", field,
                          fermat_arrangement_factors(field, m, 3))
        pts = list(cfg.points)
        nvars, label = 3, f"fermat0:{m}"
        if low == "fermat3":
            pts = pts + coordinate_points(3)
            label = f"fermat3:{m}"
    elif low == "extended-fermat":
        cfg = dual_points("extended-fermat", field,
                          fermat_arrangement_factors(field, 4, 4))
        pts, nvars, label = list(cfg.points), 4, "extended-fermat"
    else:
        raise FieldError(
            f"unknown catalog name {name!r}; choices: {CATALOG_NAMES}")
    return PointConfiguration(label, field, nvars, pts,
                              source=("catalog", label, m))


def config_from_json(obj: dict, field: Field) -> PointConfiguration:
    """Parse {"N": int, "points": [["1","-1","0"], ...], "name": ...}."""
    try:
        nvars = int(obj["N"]) + 1
        rows = obj["points"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FieldError(f"malformed configuration JSON: {exc}") from exc
    name = obj.get("name", "custom")
    pts = []
    for row in rows:
        if len(row) != nvars:
            raise FieldError(
                f"point {row} has {len(row)} coordinates, expected {nvars}")
        try:
            pts.append([field.parse(str(c)) for c in row])
        except FieldError as exc:
            raise FieldError(
                f"cannot read coordinate in {row}: {exc}; if the file uses "
                f"'u' or 'zeta', run with a field extension that carries "
                f"them (e.g. {{\"p\": 10009, \"extension\": \"golden\"}})"
            ) from exc
    raw = [[str(c) for c in row] for row in rows]
    return PointConfiguration(name, field, nvars, pts, source=("raw", raw))


def lines_through_config(config: PointConfiguration, min_points: int) -> list:
    """All lines through at least min_points of the configuration (N=2)."""
    if config.N != 2:
        raise FieldError("line search expects a planar configuration")
    fld = config.field
    pts = config.points
    lines = {}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            p, q = pts[i], pts[j]
            cross = (
                fld.sub(fld.mul(p[1], q[2]), fld.mul(p[2], q[1])),
                fld.sub(fld.mul(p[2], q[0]), fld.mul(p[0], q[2])),
                fld.sub(fld.mul(p[0], q[1]), fld.mul(p[1], q[0])),
            )
            key = normalize_point(fld, cross)
            if key not in lines:
                incident = tuple(
                    k for k, r in enumerate(pts)
                    if fld.is_zero(fld.dot(key, r)))
                lines[key] = incident
    out = [(line, idx) for line, idx in lines.items()
           if len(idx) >= min_points]
    out.sort(key=lambda t: (-len(t[1]), t[1]))
    return out


def h3_special_lines(field: Field) -> list:
    """The six 5-point lines of the H3 configuration, as linear forms."""
    u = field.golden_ratio()
    um1 = field.sub(u, field.one)
    x = MultiPoly.variable(field, 3, 0)
    y = MultiPoly.variable(field, 3, 1)
    z = MultiPoly.variable(field, 3, 2)
    return [
        y - z.scale(um1),
        y + z.scale(um1),
        x - z.scale(u),
        x + z.scale(u),
        x - y.scale(um1),
        x + y.scale(um1),
    ]
