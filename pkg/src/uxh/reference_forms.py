"""Closed-form reference data for the catalog configurations.

Curated generator lists and explicit unexpected-hypersurface equations for
the root-system and Fermat configurations.  Everything here is pinned by
hand so that the generic solvers in `unexpected` and the image machinery in
`companion` can be cross-checked against independently known answers.

Conventions match the rest of the package: coefficient variables are
(a, b, c[, d]), point variables are (x, y, z[, w]), and map coordinate
lists are ordered exactly as the corresponding target variables.
"""

import math

from .configs import h3_special_lines
from .field import Field
from .linalg import kernel
from .poly import BihomForm, MultiPoly, monomials, parse_poly


def _vars(field: Field, nvars: int) -> tuple:
    return tuple(MultiPoly.variable(field, nvars, i) for i in range(nvars))


def _golden_scalar(field: Field, p: int, q: int, r: int = 1):
    """The field element (p*u + q) / r, u being the golden ratio."""
    u = field.golden_ratio()
    num = field.add(field.mul(field.element(p), u), field.element(q))
    return field.div(num, field.element(r))


# ---------------------------------------------------------------------------
# B4


def b4_cubic_generators(field: Field) -> list:
    x, y, z, w = _vars(field, 4)
    return [x * y * z, x * y * w, x * z * w, y * z * w]


def b4_quartic_generators(field: Field) -> list:
    """The six quartic minimal generators v*w*(v^2 - w^2)."""
    x, y, z, w = _vars(field, 4)
    return [
        x * y * (x * x - y * y),
        x * z * (x * x - z * z),
        x * w * (x * x - w * w),
        y * z * (y * y - z * z),
        y * w * (y * y - w * w),
        z * w * (z * z - w * w),
    ]


def b4_quartic_basis(field: Field) -> list:
    """A 19-element basis of the degree-4 piece of the B4 ideal.

    Order: the six quartic generators, then xyzw, then the twelve
    monomials divisible by exactly three of the variables.
    """
    x, y, z, w = _vars(field, 4)
    monos = [
        x * y * z * w,
        x * x * y * z, x * y * y * z, x * y * z * z,
        x * x * y * w, x * y * y * w, x * y * w * w,
        x * x * z * w, x * z * z * w, x * z * w * w,
        y * y * z * w, y * z * z * w, y * z * w * w,
    ]
    return b4_quartic_generators(field) + monos


def b4_extra_base_points(field: Field) -> list:
    """The eight points (1:s1:s2:s3), s_i = +-1, lying on every B4 cone.

    Together with the 16 B4 points they form the F4 configuration.
    """
    one = field.one
    out = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                out.append((one, field.element(s1), field.element(s2),
                            field.element(s3)))
    return out


def b4_cone_form(field: Field) -> BihomForm:
    """Quartic cone with vertex (a:b:c:d) through the 16 B4 points.

    Bidegree (4, 4); the xyzw coefficient is identically zero.
    """
    a, b, c, d = _vars(field, 4)
    x, y, z, w = _vars(field, 4)

    def sq(f):
        return f * f

    pairs = [
        ((a * d * (sq(c) - sq(b))).scale(3), sq(x) * y * z),
        ((b * d * (sq(a) - sq(c))).scale(3), x * sq(y) * z),
        ((c * d * (sq(b) - sq(a))).scale(3), x * y * sq(z)),
        ((a * c * (sq(b) - sq(d))).scale(3), sq(x) * y * w),
        ((b * c * (sq(d) - sq(a))).scale(3), x * sq(y) * w),
        ((d * c * (sq(a) - sq(b))).scale(3), x * y * sq(w)),
        ((a * b * (sq(d) - sq(c))).scale(3), sq(x) * z * w),
        ((c * b * (sq(a) - sq(d))).scale(3), x * sq(z) * w),
        ((d * b * (sq(c) - sq(a))).scale(3), x * z * sq(w)),
        ((b * a * (sq(c) - sq(d))).scale(3), sq(y) * z * w),
        ((c * a * (sq(d) - sq(b))).scale(3), y * sq(z) * w),
        ((d * a * (sq(b) - sq(c))).scale(3), y * z * sq(w)),
        (c * d * (sq(d) - sq(c)), x * y * (sq(x) - sq(y))),
        (b * d * (sq(b) - sq(d)), x * z * (sq(x) - sq(z))),
        (b * c * (sq(c) - sq(b)), x * w * (sq(x) - sq(w))),
        (a * d * (sq(d) - sq(a)), y * z * (sq(y) - sq(z))),
        (a * c * (sq(a) - sq(c)), y * w * (sq(y) - sq(w))),
        (a * b * (sq(b) - sq(a)), z * w * (sq(z) - sq(w))),
    ]
    return BihomForm.from_pairs(field, 4, pairs)


# ---------------------------------------------------------------------------
# F4


def f4_generators(field: Field) -> list:
    """The twelve quartics m_0..m_11 generating the F4 ideal."""
    x, y, z, w = _vars(field, 4)
    return [
        x * y * (x * x - y * y), x * y * (z * z - w * w),
        x * z * (x * x - z * z), x * z * (y * y - w * w),
        x * w * (x * x - w * w), x * w * (z * z - y * y),
        y * z * (y * y - z * z), y * z * (x * x - w * w),
        y * w * (y * y - w * w), y * w * (x * x - z * z),
        z * w * (z * z - w * w), z * w * (x * x - y * y),
    ]


def f4_cone_coefficients(field: Field) -> list:
    """Coefficients of the B4/F4 cone over the basis m_0..m_11."""
    a, b, c, d = _vars(field, 4)

    def sq(f):
        return f * f

    return [
        c * d * (sq(d) - sq(c)), (c * d * (sq(b) - sq(a))).scale(3),
        b * d * (sq(b) - sq(d)), (b * d * (sq(a) - sq(c))).scale(3),
        b * c * (sq(c) - sq(b)), (b * c * (sq(a) - sq(d))).scale(3),
        a * d * (sq(d) - sq(a)), (a * d * (sq(c) - sq(b))).scale(3),
        a * c * (sq(a) - sq(c)), (a * c * (sq(b) - sq(d))).scale(3),
        a * b * (sq(b) - sq(a)), (a * b * (sq(d) - sq(c))).scale(3),
    ]


def f4_cone_form(field: Field) -> BihomForm:
    """Same cone as b4_cone_form, assembled over the F4 generators."""
    pairs = list(zip(f4_cone_coefficients(field), f4_generators(field)))
    return BihomForm.from_pairs(field, 4, pairs)


_F4_PRESENTATION = (
    ("-z", "0", "0", "0", "0", "0", "-w", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    ("y", "-y", "0", "0", "0", "0", "0", "0", "0", "0", "-w", "0", "0", "0", "0", "0"),
    ("0", "x", "-y", "0", "-z", "0", "0", "0", "0", "0", "0", "0", "-w", "0", "0", "0"),
    ("-y", "0", "x", "-y", "0", "-z", "0", "0", "0", "0", "0", "w", "0", "0", "-w", "0"),
    ("0", "0", "0", "x", "0", "0", "0", "0", "0", "0", "0", "0", "0", "w", "0", "-w"),
    ("z", "-z", "0", "z", "x", "y", "-w", "w", "0", "-w", "0", "0", "0", "0", "0", "0"),
    ("0", "0", "0", "0", "0", "0", "y", "-y", "0", "0", "z", "-z", "0", "0", "0", "0"),
    ("0", "0", "0", "0", "w", "0", "0", "x", "-y", "0", "0", "0", "z", "-z", "0", "0"),
    ("0", "0", "0", "0", "0", "w", "-y", "0", "x", "-y", "0", "0", "0", "0", "z", "0"),
    ("0", "0", "0", "0", "0", "0", "0", "0", "0", "x", "0", "0", "0", "0", "0", "z"),
    ("0", "0", "t", "0", "0", "0", "0", "0", "z", "0", "0", "x", "0", "y", "0", "0"),
    ("0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-x", "0", "y", "0", "x", "-y"),
)


def f4_presentation_matrix() -> tuple:
    """The 12 x 16 linear presentation of the F4 generators, as written.

    Returned verbatim as strings: one entry names a variable outside the
    x,y,z,w ring and is preserved rather than repaired.
    """
    return _F4_PRESENTATION


def f4_presentation_check(field: Field) -> dict:
    """Column-by-column syzygy test of the presentation matrix.

    Each column should combine m_0..m_11 to zero.  Entries that do not
    parse in the x,y,z,w ring are recorded as suspected typos and their
    columns skipped; nothing is guessed in their place.

    Two diagnostics accompany the verdict.  ``linear_syzygy_dimension``
    is the true dimension of the degree-5 syzygies of m_0..m_11, which
    must be 16 for a 16-column linear presentation to exist at all.
    ``relabelings`` is the dimension of the space of 12 x 12 matrices A
    such that every parseable column annihilates (A m); a value of 1
    whose generator is a signed permutation means the printed columns
    are genuine syzygies written against a reordered generator list.
    """
    gens = f4_generators(field)
    names = ("x", "y", "z", "w")
    zero_cols, nonzero_cols, bad = [], [], []
    parsed = {}
    for j in range(16):
        col = []
        ok = True
        for i in range(12):
            text = _F4_PRESENTATION[i][j]
            try:
                col.append(parse_poly(field, text, names=names))
            except Exception:
                bad.append({"row": i, "column": j, "entry": text})
                ok = False
        if not ok:
            continue
        parsed[j] = col
        acc = MultiPoly.zero(field, 4)
        for g, e in zip(gens, col):
            acc = acc + g * e
        (zero_cols if acc.is_zero() else nonzero_cols).append(j)

    mons = monomials(4, 5)
    midx = {e: i for i, e in enumerate(mons)}
    prods = [[gens[i] * MultiPoly.variable(field, 4, v) for v in range(4)]
             for i in range(12)]
    rows = [[prods[u // 4][u % 4].coeffs.get(e, field.element(0))
             for u in range(48)] for e in mons]
    syz_dim = len(kernel(field, rows))

    relab_rows = []
    for col in parsed.values():
        contrib: dict = {}
        for i, ent in enumerate(col):
            if ent.is_zero():
                continue
            for k in range(12):
                for e, cval in (ent * gens[k]).coeffs.items():
                    row = contrib.setdefault(midx[e], [field.element(0)] * 144)
                    row[12 * i + k] = field.add(row[12 * i + k], cval)
        relab_rows.extend(contrib.values())
    relab = kernel(field, relab_rows)
    signed_perm = False
    if len(relab) == 1:
        a = [[c for c in relab[0][12 * i:12 * i + 12]
              if not field.is_zero(c)] for i in range(12)]
        signed_perm = all(len(r) == 1 for r in a)

    return {
        "columns": 16,
        "syzygy_columns": zero_cols,
        "failing_columns": nonzero_cols,
        "suspect_entries": bad,
        "linear_syzygy_dimension": syz_dim,
        "relabelings": len(relab),
        "relabeling_is_signed_permutation": signed_perm,
    }


# ---------------------------------------------------------------------------
# H3


def h3_lines(field: Field) -> list:
    """L_1..L_6, the six lines through five configuration points each."""
    return h3_special_lines(field)


def h3_conjugate_lines(field: Field) -> list:
    """M_1..M_6, the golden-conjugate partners of L_1..L_6."""
    x, y, z = _vars(field, 3)
    u = field.golden_ratio()
    ubar = field.sub(field.element(1), u)
    return [
        y + z.scale(u), y - z.scale(u),
        x - z.scale(ubar), x + z.scale(ubar),
        x + y.scale(u), x - y.scale(u),
    ]


def h3_quintics(field: Field) -> list:
    """f_1..f_6: products of all special lines but one."""
    lines = h3_lines(field)
    out = []
    for i in range(6):
        f = MultiPoly.constant(field, 3, 1)
        for j, line in enumerate(lines):
            if j != i:
                f = f * line
        out.append(f)
    return out


def h3_sextics(field: Field) -> list:
    """g_1..g_13, a basis of the degree-6 piece of the H3 ideal."""
    lines = h3_lines(field)
    fs = h3_quintics(field)
    gs = [lines[0] * f for f in fs]
    gs += [
        lines[1] * fs[0], lines[1] * fs[2], lines[1] * fs[3],
        lines[1] * fs[4], lines[1] * fs[5],
        lines[2] * fs[0], lines[2] * fs[1],
    ]
    return gs


def h3_curve_coefficients(field: Field) -> list:
    """h_1..h_13: quintic coefficients of the sextic over g_1..g_13.

    h_1 is a combination of the other twelve, so the span has dimension
    twelve.
    """
    a, b, c = _vars(field, 3)
    u = field.golden_ratio()

    def k(p, q, r=1):
        return _golden_scalar(field, p, q, r)

    um1 = k(1, -1)
    up2 = k(1, 2)
    um3 = k(1, -3)

    inner = (
        b ** 4
        + (a * b * b * c).scale(k(-44, 72))
        + (b * b * c * c).scale(k(-6, 8))
        + (a * c ** 3).scale(k(-4, 12))
        + (c ** 4).scale(k(1, -3))
    )
    h1 = (b * inner).scale(k(7, 4, 2))
    h2 = ((a + b.scale(k(1, 2, 5)) + c.scale(k(-3, -1, 5)))
          * (b + c.scale(um1)) ** 4).scale(k(-10, -5, 4))
    h3 = ((a + b.scale(up2) + c.scale(um1)) * (a - c.scale(u)) ** 4).scale(k(2, -1, 4))
    h4 = ((a - b.scale(up2) - c.scale(um1)) * (a + c.scale(u)) ** 4).scale(k(-2, 1, 4))
    h5 = ((a - b.scale(um1)) ** 4 * (a + b.scale(u) - c.scale(um3))).scale(k(4, 3, 4))
    h6 = ((a + b.scale(um1)) ** 4 * (a - b.scale(u) + c.scale(um3))).scale(k(-4, -3, 4))
    h7 = ((a + b.scale(k(-1, -2, 5)) + c.scale(k(-3, -1, 5)))
          * (b - c.scale(um1)) ** 4).scale(k(10, 5, 4))
    h8 = ((a - b.scale(up2) + c.scale(um1)) * (a - c.scale(u)) ** 4).scale(k(2, -1, 4))
    h9 = ((a + b.scale(up2) - c.scale(um1)) * (a + c.scale(u)) ** 4).scale(k(-2, 1, 4))
    h10 = ((a - b.scale(um1)) ** 4 * (a + b.scale(u) + c.scale(um3))).scale(k(-4, -3, 4))
    h11 = ((a + b.scale(um1)) ** 4 * (a - b.scale(u) - c.scale(um3))).scale(k(4, 3, 4))
    h12 = ((b + c.scale(u)) * (b - c.scale(um1)) ** 4).scale(k(-3, -1, 2))
    h13 = ((b - c.scale(u)) * (b + c.scale(um1)) ** 4).scale(k(3, 1, 2))
    return [h1, h2, h3, h4, h5, h6, h7, h8, h9, h10, h11, h12, h13]


def h3_companion_generators(field: Field) -> list:
    """q_1..q_12: the twelve quintics defining the companion map."""
    a, b, c = _vars(field, 3)
    u = field.golden_ratio()
    um1 = field.sub(u, field.element(1))
    p1 = (b - c.scale(um1)) ** 4
    p2 = (b + c.scale(um1)) ** 4
    p3 = (a - c.scale(u)) ** 4
    p4 = (a + c.scale(u)) ** 4
    p5 = (a - b.scale(um1)) ** 4
    p6 = (a + b.scale(um1)) ** 4
    return [
        a * p1, (b + c.scale(u)) * p1,
        a * p2, (b - c.scale(u)) * p2,
        b * p3, (a + c.scale(um1)) * p3,
        b * p4, (a - c.scale(um1)) * p4,
        c * p5, (a + b.scale(u)) * p5,
        c * p6, (a - b.scale(u)) * p6,
    ]


def h3_curve_form(field: Field) -> BihomForm:
    """The H3 sextic with a general quintuple point, bidegree (5, 6)."""
    pairs = list(zip(h3_curve_coefficients(field), h3_sextics(field)))
    return BihomForm.from_pairs(field, 3, pairs)


def h3_curve_form_factored(field: Field) -> BihomForm:
    """The same sextic assembled from the companion generators.

    Grouping the thirteen h-coefficients by their repeated quartic
    factors collapses the sum to three symmetric blocks.
    """
    x, y, z = _vars(field, 3)
    q = h3_companion_generators(field)
    fs = h3_quintics(field)
    ms = h3_conjugate_lines(field)
    s1 = _golden_scalar(field, 3, 1, 2)
    s2 = _golden_scalar(field, -2, 1, 2)

    def block(s, m_odd, f_odd, m_even, f_even, v, qs):
        neg = field.neg(s)
        return [
            (qs[0].scale(s), m_odd * f_odd),
            (qs[1].scale(neg), v * f_odd),
            (qs[2].scale(neg), m_even * f_even),
            (qs[3].scale(s), v * f_even),
        ]

    pairs = []
    pairs += block(s1, ms[0], fs[0], ms[1], fs[1], x, q[0:4])
    pairs += block(s2, ms[2], fs[2], ms[3], fs[3], y, q[4:8])
    pairs += block(s1, ms[4], fs[4], ms[5], fs[5], z, q[8:12])
    return BihomForm.from_pairs(field, 3, pairs)


def h3_projection_sextics(field: Field) -> list:
    """Twelve sextics projecting the degree-21 surface into one lower
    ambient dimension."""
    x, y, z = _vars(field, 3)
    ms = h3_conjugate_lines(field)
    fs = h3_quintics(field)
    return [
        ms[0] * fs[0], x * fs[0], ms[1] * fs[1], x * fs[1],
        ms[2] * fs[2], y * fs[2], ms[3] * fs[3], y * fs[3],
        ms[4] * fs[4], z * fs[4], ms[5] * fs[5], z * fs[5],
    ]


# ---------------------------------------------------------------------------
# Fermat arrangements


def fermat_g_forms(field: Field, m: int) -> list:
    """G_x, G_y, G_z of degree m+2, minimal generators alongside xyz."""
    x, y, z = _vars(field, 3)
    sg = field.element((-1) ** m)
    gx = y * z * (y ** m - (z ** m).scale(sg))
    gy = z * x * (z ** m - (x ** m).scale(sg))
    gz = x * y * (x ** m - (y ** m).scale(sg))
    return [gx, gy, gz]


def fermat_ideal_generators(field: Field, m: int) -> list:
    """Generators of the ideal of the augmented dual configuration."""
    x, y, z = _vars(field, 3)
    return [x * y * z] + fermat_g_forms(field, m)


def fermat_phi_indices(m: int) -> dict:
    """Target-coordinate bookkeeping for the degree-(m+2) map.

    Monomial coordinates carry the graded-lex order of their degree-(m-1)
    cofactors; hx/hy/hz mark the pure powers, gx/gy/gz the three G forms.
    """
    mus = monomials(3, m - 1)
    n = len(mus)
    return {
        "hx": mus.index((m - 1, 0, 0)),
        "hy": mus.index((0, m - 1, 0)),
        "hz": mus.index((0, 0, m - 1)),
        "gx": n, "gy": n + 1, "gz": n + 2,
        "count": n + 3,
    }


def fermat_phi_forms(field: Field, m: int) -> list:
    """All degree-(m+2) generators: xyz times each degree-(m-1) monomial
    in graded-lex order, followed by G_x, G_y, G_z."""
    x, y, z = _vars(field, 3)
    xyz = x * y * z
    mus = [MultiPoly.monomial(field, 3, e) for e in monomials(3, m - 1)]
    return [xyz * t for t in mus] + fermat_g_forms(field, m)


def fermat_projection_keep(m: int) -> list:
    """Coordinate indices kept after projecting away every monomial
    coordinate divisible by (xyz)^2; exactly 3m survive."""
    mus = monomials(3, m - 1)
    kept = [i for i, e in enumerate(mus) if min(e) == 0]
    n = len(mus)
    return kept + [n, n + 1, n + 2]


def fermat_projection_forms(field: Field, m: int) -> list:
    phi = fermat_phi_forms(field, m)
    return [phi[i] for i in fermat_projection_keep(m)]


def fermat_companion_forms(field: Field, m: int) -> list:
    """The 3m coordinates of the companion map in (a, b, c)."""
    a, b, c = _vars(field, 3)
    sg = field.element((-1) ** m)
    out = [a ** (m + 1), b ** (m + 1), c ** (m + 1)]
    for s, t in ((a, b), (a, c), (b, c)):
        out += [s ** (m - i) * t ** (i + 1) for i in range(1, m - 1)]
    out += [
        a * (b ** m - (c ** m).scale(sg)),
        b * (a ** m - (c ** m).scale(sg)),
        c * (b ** m - (a ** m).scale(sg)),
    ]
    return out


def fermat_cubic(field: Field, m: int) -> MultiPoly:
    """The unique cubic in the image ideal of the degree-(m+2) map.

    Written in the target coordinates fixed by fermat_phi_indices.  The
    sign of the pure-G product flips with the parity of m, and the pure-H
    term appears only for odd m; both choices are forced by requiring the
    pullback to vanish identically.
    """
    idx = fermat_phi_indices(m)
    n = idx["count"]

    def v(i):
        return MultiPoly.variable(field, n, i)

    hx, hy, hz = v(idx["hx"]), v(idx["hy"]), v(idx["hz"])
    gx, gy, gz = v(idx["gx"]), v(idx["gy"]), v(idx["gz"])
    cub = gx * hy * hz + hx * gy * hz + hx * hy * gz
    cub = cub + (gx * gy * gz).scale((-1) ** m)
    if m % 2:
        cub = cub + (hx * hy * hz).scale(2)
    return cub


def fermat_quadrics(field: Field, m: int) -> list:
    """A generating set for the degree-2 piece of the image ideal.

    Binomial quadrics pair monomial coordinates with equal exponent sums;
    three further families tie each G coordinate to the monomial block.
    The total count is 3*C(m+2, 4).
    """
    idx = fermat_phi_indices(m)
    n = idx["count"]
    mus = monomials(3, m - 1)
    pos = {e: i for i, e in enumerate(mus)}

    def v(i):
        return MultiPoly.variable(field, n, i)

    def mu(e0, e1, e2):
        return pos[(e0 - 1, e1 - 1, e2 - 1)]

    out = []
    by_sum = {}
    for i, e in enumerate(mus):
        for j in range(i, len(mus)):
            f = mus[j]
            key = tuple(p + q for p, q in zip(e, f))
            by_sum.setdefault(key, []).append((i, j))
    for pairs in by_sum.values():
        i0, j0 = pairs[0]
        anchor = v(i0) * v(j0)
        for i, j in pairs[1:]:
            out.append(anchor - v(i) * v(j))

    sg = field.element((-1) ** m)
    hx, hy, hz = v(idx["hx"]), v(idx["hy"]), v(idx["hz"])
    gx, gy, gz = v(idx["gx"]), v(idx["gy"]), v(idx["gz"])
    for s0, s1, s2 in monomials(3, m + 2):
        if s0 >= 2 and s1 >= 1 and s2 >= 1:
            out.append(v(mu(s0 - 1, s1 + 1, s2)) * hy
                       - (v(mu(s0 - 1, s1, s2 + 1)) * hz).scale(sg)
                       - v(mu(s0, s1, s2)) * gx)
        if s1 >= 2 and s0 >= 1 and s2 >= 1:
            out.append(v(mu(s0, s1 - 1, s2 + 1)) * hz
                       - (v(mu(s0 + 1, s1 - 1, s2)) * hx).scale(sg)
                       - v(mu(s0, s1, s2)) * gy)
        if s2 >= 2 and s0 >= 1 and s1 >= 1:
            out.append(v(mu(s0 + 1, s1, s2 - 1)) * hx
                       - (v(mu(s0, s1 + 1, s2 - 1)) * hy).scale(sg)
                       - v(mu(s0, s1, s2)) * gz)
    return out


def fermat_curve_form(field: Field, m: int) -> BihomForm:
    """Bidegree (m+1, m+2): the curve of degree m+2 with a general point
    of multiplicity m+1 through the augmented dual configuration.

    The monomial part runs over the cyclic parameter pairs (a,b), (b,c),
    (c,a), each matched with its point pair (x,y), (y,z), (z,x):

        xyz * sum_i (-1)^(i+1) binom(m+1, i+1) s^(m-i) t^(i+1) v^i w^(m-1-i)

    for i = 0..m-1, plus a^(m+1) G_x + b^(m+1) G_y + c^(m+1) G_z.  The
    cyclic orientation is forced: breaking it destroys the vanishing at
    the general point.
    """
    a, b, c = _vars(field, 3)
    x, y, z = _vars(field, 3)
    gx, gy, gz = fermat_g_forms(field, m)
    xyz = x * y * z
    pairs = [(a ** (m + 1), gx), (b ** (m + 1), gy), (c ** (m + 1), gz)]
    for (s, t), (v, w) in (((a, b), (x, y)), ((b, c), (y, z)), ((c, a), (z, x))):
        for i in range(m):
            co = (-1) ** (i + 1) * math.comb(m + 1, i + 1)
            pairs.append(((s ** (m - i) * t ** (i + 1)).scale(co),
                          xyz * v ** i * w ** (m - 1 - i)))
    return BihomForm.from_pairs(field, 3, pairs)


# ---------------------------------------------------------------------------
# Numeric invariants of the Fermat images


def fermat_image_degree(m: int) -> int:
    """Degree of the image of the full degree-(m+2) map (and of its
    projection)."""
    return m * m + m + 1


def fermat_companion_degree(m: int) -> int:
    return (m + 1) ** 2


def fermat_quadric_count(m: int) -> int:
    return 3 * math.comb(m + 2, 4)


def fermat_projection_quadric_count(m: int) -> int:
    return (5 * m * m - m - 12) // 2


def fermat_companion_quadric_count(m: int) -> int:
    return (5 * m * m - 5 * m - 12) // 2


def fermat_projection_hvector(m: int) -> tuple:
    """Conjectured h-vector of the projected image; the negative entry
    witnesses failure of the Cohen-Macaulay property."""
    return (
        1,
        3 * (m - 1),
        2 * m * m - 7 * m + 9,
        -(3 * (m - 2) * (m - 3)) // 2,
        ((m - 2) * (m - 3)) // 2,
    )


def fermat_companion_hvector(m: int) -> tuple:
    """Conjectured h-vector of the companion image."""
    return (
        1,
        3 * (m - 1),
        2 * m * m - 5 * m + 9,
        -(3 * (m - 2) * (m - 3)) // 2,
        ((m - 1) * (m - 6)) // 2,
    )
