"""Moment images, stability classes, stabilizers and compatibility.

Moment images of ample linearizations on products of projective spaces are
computed combinatorially: the image of the Fubini-Study moment map of a
diagonal linear action is the multidegree-weighted Minkowski sum of the
per-factor coordinate-weight hulls, translated by the character twist.
Every section weight of L^k lies in k times this image, which is what the
vanishing machinery exploits.

Stability of a bundle is read off the position of the origin:

* outside the image              -> every point is unstable;
* at the image of a fixed point
  or on a critical segment       -> semistable != stable (a wall);
* interior and non-critical      -> regular (stable = semistable != empty).

For rank-2 torus actions the critical values of the moment map are the
weighted Minkowski sums of per-factor weight groups that are constant
along some direction orthogonal to a coordinate-weight difference; the
origin is a regular value iff it avoids all of them.  SU(2) factors are
classified through the classical stability theory of binary forms,
restricted to the supported single-factor scenarios.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import ceil, floor, gcd

from .model import Rational, Scenario, UnsupportedScenario

REGULAR = "regular"
BOUNDARY = "boundary"
UNSTABLE = "unstable_everywhere"
TRIVIAL = "trivial_action"

INSIDE = "inside"
ON_WALL = "on_vertex_or_wall"
OUTSIDE = "outside"


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def _hull2d(points):
    """Monotone-chain convex hull, counterclockwise; exact arithmetic."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(
            (lower[-1][0] - lower[-2][0], lower[-1][1] - lower[-2][1]),
            (p[0] - lower[-2][0], p[1] - lower[-2][1]),
        ) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(
            (upper[-1][0] - upper[-2][0], upper[-1][1] - upper[-2][1]),
            (p[0] - upper[-2][0], p[1] - upper[-2][1]),
        ) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # all points collinear
        return (pts[0], pts[-1])
    return tuple(hull)


@dataclass(frozen=True)
class MomentImage:
    """Moment map image of the bundle itself (tensor power k scales by k).

    rank 1 (circle g=1, and the su2 dominant picture) stores an interval;
    rank 2 stores a hull vertex list in counterclockwise order (1 or 2
    vertices when degenerate).
    """

    rank: int
    vertices: tuple
    dominant: bool = False

    @property
    def interval(self) -> tuple[Rational, Rational]:
        if self.rank != 1:
            raise ValueError("interval only defined for rank-1 images")
        vals = [v[0] for v in self.vertices]
        return (min(vals), max(vals))

    def contains_zero(self) -> bool:
        lo, hi = self._scale_range_raw((0,) * self.rank)
        # 0 in the image iff mu=0 admits every scale, i.e. scale 1 works
        return _scale_admits(lo, hi, 1)

    def zero_interior(self) -> bool:
        if self.rank == 1:
            lo, hi = self.interval
            return lo < 0 < hi
        if len(self.vertices) < 3:
            return False
        vs = self.vertices
        for i, v in enumerate(vs):
            w = vs[(i + 1) % len(vs)]
            e = (w[0] - v[0], w[1] - v[1])
            if -_cross(e, v) <= 0:
                return False
        return True

    def scaled_contains(self, mu_vec: tuple[int, ...], k: int) -> bool:
        """Exact test mu in k * image."""
        lo, hi = self._scale_range_raw(mu_vec)
        return _scale_admits(lo, hi, k)

    def scale_range(self, mu_vec: tuple[int, ...]) -> tuple[int | None, int | None]:
        """Integer interval of scales r >= 1 with mu in r*image.

        Returns (r_min, r_max); r_max is None when unbounded, (None, None)
        when no scale admits mu.
        """
        lo, hi = self._scale_range_raw(mu_vec)
        r_min = max(1, ceil(lo)) if lo is not None else None
        if r_min is None:
            return (None, None)
        r_max = None
        if hi is not None:
            r_max = floor(hi)
            if r_max < r_min:
                return (None, None)
        return (r_min, r_max)

    # constraint solving: each hull facet contributes beta*r <= alpha with
    # alpha, beta linear data; degenerate images add exact equalities.
    def _scale_range_raw(self, mu_vec):
        mu = tuple(Fraction(x) for x in mu_vec)
        lo: Fraction | None = Fraction(0)
        hi: Fraction | None = None
        eqs: list[tuple[Fraction, Fraction]] = []
        ineqs: list[tuple[Fraction, Fraction]] = []
        if self.rank == 1:
            a, b = self.interval
            ineqs.append((a, mu[0]))
            ineqs.append((-b, -mu[0]))
        elif len(self.vertices) == 1:
            p = self.vertices[0]
            eqs.extend(((Fraction(p[0]), mu[0]), (Fraction(p[1]), mu[1])))
        elif len(self.vertices) == 2:
            p, q = self.vertices
            e = (q[0] - p[0], q[1] - p[1])
            eqs.append((Fraction(_cross(e, p)), Fraction(_cross(e, mu))))
            ineqs.append((Fraction(_dot(p, e)), Fraction(_dot(mu, e))))
            ineqs.append((Fraction(-_dot(q, e)), Fraction(-_dot(mu, e))))
        else:
            vs = self.vertices
            for i, v in enumerate(vs):
                w = vs[(i + 1) % len(vs)]
                e = (w[0] - v[0], w[1] - v[1])
                ineqs.append((Fraction(_cross(e, v)), Fraction(_cross(e, mu))))
        for beta, alpha in ineqs:
            if beta > 0:
                cand = alpha / beta
                hi = cand if hi is None else min(hi, cand)
            elif beta == 0:
                if alpha < 0:
                    return (None, None)
            else:
                lo = max(lo, alpha / beta)
        for a, b in eqs:
            if a == 0:
                if b != 0:
                    return (None, None)
                continue
            r = b / a
            lo = max(lo, r)
            hi = r if hi is None else min(hi, r)
            if r.denominator != 1:
                return (None, None)
        if hi is not None and lo is not None and hi < lo:
            return (None, None)
        return (lo, hi)


def _scale_admits(lo, hi, k) -> bool:
    if lo is None:
        return False
    return lo <= k and (hi is None or k <= hi)


def moment_image(s: Scenario) -> MomentImage:
    """Weight hull of the bundle: Minkowski sum of d_j-scaled factor hulls
    plus the twist.  For su2 this is the dominant interval."""
    if s.group.is_su2:
        if len(s.factors) != 1:
            raise UnsupportedScenario("su2 geometry supports single-factor scenarios")
        sym = s.factors[0].sym_powers
        d = s.bundle.degrees[0]
        hi = d * max(sym)
        lo = d if sym == (1,) else 0
        return MomentImage(rank=1, vertices=((Fraction(lo),), (Fraction(hi),)), dominant=True)
    g = s.group.dim
    if g == 1:
        lo = sum(d * min(w[0] for w in f.weights) for f, d in zip(s.factors, s.bundle.degrees))
        hi = sum(d * max(w[0] for w in f.weights) for f, d in zip(s.factors, s.bundle.degrees))
        c = s.bundle.twist[0]
        return MomentImage(rank=1, vertices=((Fraction(lo + c),), (Fraction(hi + c),)))
    if g == 2:
        c = s.bundle.twist
        sums = [c]
        for f, d in zip(s.factors, s.bundle.degrees):
            verts = _hull2d([(d * w[0], d * w[1]) for w in f.weights])
            sums = [(x[0] + v[0], x[1] + v[1]) for x in sums for v in verts]
        return MomentImage(rank=2, vertices=_hull2d(sums))
    raise UnsupportedScenario(f"moment images implemented for circle rank <= 2, got g={g}")


def fixed_point_images(s: Scenario) -> set:
    """Moment images of the torus-fixed points: one distinct coordinate
    weight per factor, d-weighted and twisted."""
    if s.group.is_su2:
        raise UnsupportedScenario("fixed-point images are a torus-side computation")
    g = s.group.dim
    per_factor = [
        {tuple(d * x for x in w) for w in f.weights}
        for f, d in zip(s.factors, s.bundle.degrees)
    ]
    out = set()
    for combo in itertools.product(*per_factor):
        v = tuple(sum(x) + c for x, c in zip(zip(*combo), s.bundle.twist))
        out.add(v if g > 1 else v[0])
    return out


def _primitive(v: tuple[int, int]) -> tuple[int, int]:
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def _zero_is_critical_rank2(s: Scenario) -> bool:
    # 0 lies on a critical segment: some direction xi orthogonal to a
    # weight difference, per-factor weight groups constant along xi whose
    # weighted sum line passes through 0 with 0 inside the segment.
    dirs = set()
    for f in s.factors:
        ws = f.weights
        for a, b in itertools.combinations(ws, 2):
            d = (a[0] - b[0], a[1] - b[1])
            if d != (0, 0):
                xi = _primitive((-d[1], d[0]))
                dirs.add(xi if xi > (-xi[0], -xi[1]) else (-xi[0], -xi[1]))
    c = s.bundle.twist
    for xi in dirs:
        tau = (-xi[1], xi[0])
        groups_per_factor = []
        for f in s.factors:
            groups: dict[int, list] = {}
            for w in f.weights:
                groups.setdefault(_dot(w, xi), []).append(w)
            groups_per_factor.append(groups)
        for combo in itertools.product(*(g.items() for g in groups_per_factor)):
            level = sum(
                d * v for d, (v, _) in zip(s.bundle.degrees, combo)
            ) + _dot(c, xi)
            if level != 0:
                continue
            lo = sum(
                d * min(_dot(w, tau) for w in ws)
                for d, (_, ws) in zip(s.bundle.degrees, combo)
            ) + _dot(c, tau)
            hi = sum(
                d * max(_dot(w, tau) for w in ws)
                for d, (_, ws) in zip(s.bundle.degrees, combo)
            ) + _dot(c, tau)
            if lo <= 0 <= hi:
                return True
    return False


@dataclass(frozen=True)
class StabilityReport:
    stability: str  # regular | boundary | unstable_everywhere | trivial_action
    moment_image: MomentImage
    zero_position: str  # inside | on_vertex_or_wall | outside


def classify_stability(s: Scenario) -> StabilityReport:
    img = moment_image(s)
    if s.group.is_su2:
        sym = s.factors[0].sym_powers
        if all(m == 0 for m in sym):
            return StabilityReport(TRIVIAL, img, ON_WALL)
        if sym == (1,):
            return StabilityReport(UNSTABLE, img, OUTSIDE)
        if all(m % 2 == 1 for m in sym):
            return StabilityReport(REGULAR, img, INSIDE)
        return StabilityReport(BOUNDARY, img, ON_WALL)

    if not img.contains_zero():
        return StabilityReport(UNSTABLE, img, OUTSIDE)
    action_trivial = all(len(set(f.weights)) == 1 for f in s.factors)
    if action_trivial:
        return StabilityReport(TRIVIAL, img, ON_WALL)
    stab = generic_stabilizer(s)
    if not stab.finite:
        return StabilityReport(BOUNDARY, img, ON_WALL)
    zero = (0,) * s.group.dim if s.group.dim > 1 else 0
    critical = zero in fixed_point_images(s)
    if not critical and s.group.dim == 2:
        critical = _zero_is_critical_rank2(s)
    if critical or not img.zero_interior():
        return StabilityReport(BOUNDARY, img, ON_WALL)
    return StabilityReport(REGULAR, img, INSIDE)


# ---------------------------------------------------------------------------
# generic stabilizers and associated characters


@dataclass(frozen=True)
class StabilizerData:
    """Generic stabilizer of the action, as far as the torus data sees it.

    For circle powers this is the full generic stabilizer (kernel of all
    coordinate-weight differences).  For su2 it is the central part,
    {+-1} when every factor's blocks share a parity; the supported
    scenarios have central generic stabilizers so the two coincide.
    """

    finite: bool
    order: int | None
    invariant_factors: tuple[int, ...] = ()
    # Hermite data (a, b, c) of the rank-2 difference lattice, columns
    # (a, b) and (0, c); None for rank 1 / su2.
    hermite: tuple[int, int, int] | None = None

    def residue(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        if not self.finite:
            raise UnsupportedScenario("residues undefined for infinite stabilizers")
        if self.hermite is None:
            d = self.order
            return (vec[0] % d,) if d > 1 else (0,)
        a, b, c = self.hermite
        sdiv, rx = divmod(vec[0], a)
        ry = (vec[1] - b * sdiv) % c
        return (rx, ry)

    def contains(self, vec: tuple[int, ...]) -> bool:
        """Membership of an integer vector in the difference lattice."""
        return self.residue(vec) == self.residue((0,) * len(vec))


def _difference_vectors(s: Scenario):
    for f in s.factors:
        ws = f.weights
        for a, b in itertools.combinations(ws, 2):
            d = tuple(x - y for x, y in zip(a, b))
            if any(d):
                yield d


def generic_stabilizer(s: Scenario) -> StabilizerData:
    if s.group.is_su2:
        if len(s.factors) != 1:
            raise UnsupportedScenario("su2 geometry supports single-factor scenarios")
        parities = {m % 2 for m in s.factors[0].sym_powers}
        if len(parities) == 1:
            return StabilizerData(finite=True, order=2, invariant_factors=(2,))
        return StabilizerData(finite=True, order=1, invariant_factors=(1,))
    g = s.group.dim
    diffs = list(_difference_vectors(s))
    if g == 1:
        d = 0
        for v in diffs:
            d = gcd(d, v[0])
        if d == 0:
            return StabilizerData(finite=False, order=None)
        return StabilizerData(finite=True, order=d, invariant_factors=(d,) if d > 1 else (1,))
    if g == 2:
        herm = _hermite_2(diffs)
        if herm is None:
            return StabilizerData(finite=False, order=None)
        a, b, c = herm
        order = a * c
        f1 = 0
        for v in diffs:
            f1 = gcd(f1, gcd(v[0], v[1]))
        f2 = order // f1
        return StabilizerData(
            finite=True, order=order, invariant_factors=(f1, f2), hermite=herm
        )
    raise UnsupportedScenario(f"stabilizers implemented for circle rank <= 2, got g={g}")


def _hermite_2(cols) -> tuple[int, int, int] | None:
    """Column Hermite form [[a,0],[b,c]] of the lattice spanned by `cols`;
    None when the lattice has rank < 2."""
    cols = [tuple(c) for c in cols if any(c)]
    if not cols:
        return None
    # reduce to a single column with nonzero x plus columns with x = 0
    work = list(cols)
    lead = None
    rest = []
    for v in work:
        if v[0] == 0:
            rest.append(v[1])
            continue
        if lead is None:
            lead = v
            continue
        a, b = lead, v
        while b[0]:
            q = a[0] // b[0]
            a, b = b, (a[0] - q * b[0], a[1] - q * b[1])
        lead = a
        if b[1]:
            rest.append(b[1])
    if lead is None:
        return None
    if lead[0] < 0:
        lead = (-lead[0], -lead[1])
    c = 0
    for y in rest:
        c = gcd(c, y)
    if c == 0:
        return None
    a, b = lead[0], lead[1] % c
    return (a, b, c)


@dataclass(frozen=True)
class CompatibilityCertificate:
    """Witness data for the positivity criterion chi^r . conj(mu_K) = 1.

    ``chi`` and ``mu_k`` are residues of the bundle fiber character and of
    the restricted weight character in the stabilizer's residue
    coordinates; ``witness`` is the smallest r in [1, |K|] solving
    r*chi = mu_k, or None when no r exists.
    """

    stabilizer: StabilizerData
    chi: tuple[int, ...]
    mu_k: tuple[int, ...]
    witness: int | None

    @property
    def compatible(self) -> bool:
        return self.witness is not None


def bundle_fiber_character(s: Scenario, stab: StabilizerData) -> tuple[int, ...]:
    """Residue of the character by which K acts on the fiber of L at a
    general point: sum_j d_j * w_{j,0} + c restricted to K."""
    if s.group.is_su2:
        sigma = sum(d * f.sym_powers[0] for f, d in zip(s.factors, s.bundle.degrees))
        return stab.residue((sigma,))
    g = s.group.dim
    base = [0] * g
    for f, d in zip(s.factors, s.bundle.degrees):
        for i in range(g):
            base[i] += d * f.weights[0][i]
    for i in range(g):
        base[i] += s.bundle.twist[i]
    res = stab.residue(tuple(base))
    # well-definedness: every coordinate choice must give the same residue
    for f, d in zip(s.factors, s.bundle.degrees):
        for w in f.weights:
            delta = tuple(d * (w[i] - f.weights[0][i]) for i in range(g))
            assert stab.contains(delta), "fiber character depends on the reference coordinate"
    return res


def numerically_compatible(s: Scenario, mu) -> CompatibilityCertificate:
    """Search r in [1, |K|] with r*chi = mu_K in the stabilizer's character
    group; existence is exactly the positivity criterion for vol_mu on
    regular bundles."""
    stab = generic_stabilizer(s)
    if not stab.finite:
        raise UnsupportedScenario("compatibility undefined for infinite generic stabilizers")
    mu_vec = s.weight_vec(mu)
    s.check_dominant(mu)
    chi = bundle_fiber_character(s, stab)
    mu_res = stab.residue(mu_vec)
    witness = None
    for r in range(1, stab.order + 1):
        acc = tuple(r * x for x in chi)
        diff = tuple(a - b for a, b in zip(acc, mu_res))
        if stab.contains(diff):
            witness = r
            break
    return CompatibilityCertificate(stab, chi, mu_res, witness)


def dim_V_mu(group, mu) -> int:
    """1 for circle powers, mu+1 for su2; takes a GroupSpec or Scenario."""
    is_su2 = group.is_su2 if not isinstance(group, Scenario) else group.group.is_su2
    if not is_su2:
        return 1
    v = mu if isinstance(mu, int) else mu[0]
    if v < 0:
        raise ValueError("su2 highest weights must be >= 0")
    return v + 1


def predicted_volume(s: Scenario, mu, vol0: Rational) -> Rational:
    """Closed-form volume on regular scenarios: 0 without a compatibility
    witness, else dim(V_mu)^2 * vol0 (vol0 = counted trivial-weight volume,
    which equals the reduced-space volume since dim V_0 = 1)."""
    report = classify_stability(s)
    if report.stability != REGULAR:
        raise UnsupportedScenario(f"prediction defined for regular scenarios, got {report.stability}")
    cert = numerically_compatible(s, mu)
    if not cert.compatible:
        return Fraction(0)
    return Fraction(dim_V_mu(s, mu)) ** 2 * Fraction(vol0)


# ---------------------------------------------------------------------------
# reduced-space volume by exact simplex slicing


def _kernel_basis(v: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Basis of the lattice ker(v) in Z^n via unimodular column reduction."""
    n = len(v)
    g = 0
    for x in v:
        g = gcd(g, x)
    vals = [x // g for x in v]
    cols = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    lead = None  # (value, column)
    kernel = []
    for j in range(n):
        val, col = vals[j], cols[j]
        if val == 0:
            kernel.append(col)
            continue
        if lead is None:
            lead = (val, col)
            continue
        a, b = lead, (val, col)
        while b[0]:
            q = a[0] // b[0]
            a, b = b, (a[0] - q * b[0], tuple(x - q * y for x, y in zip(a[1], b[1])))
        lead = a
        kernel.append(b[1])
    return kernel


def _solve_in_basis(basis, target):
    """Exact coordinates of `target` in the column span of `basis`."""
    m = len(basis)  # number of basis vectors, each of length n
    n = len(target)
    rows = [[Fraction(basis[j][i]) for j in range(m)] + [Fraction(target[i])] for i in range(n)]
    piv = 0
    pivots = []
    for col in range(m):
        r = next((i for i in range(piv, n) if rows[i][col] != 0), None)
        if r is None:
            continue
        rows[piv], rows[r] = rows[r], rows[piv]
        rows[piv] = [x / rows[piv][col] for x in rows[piv]]
        for i in range(n):
            if i != piv and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[piv])]
        pivots.append(col)
        piv += 1
    sol = [Fraction(0)] * m
    for i, col in enumerate(pivots):
        sol[col] = rows[i][-1]
    for i in range(piv, n):
        if rows[i][-1] != 0:
            raise ValueError("target not in span")
    return tuple(sol)


def dh_slice_volume(s: Scenario) -> Rational:
    """Exact normalized volume of the zero-level slice of the moment
    simplex, for rank-1 single-factor regular scenarios with n <= 3.

    Normalization is pinned to counting: the returned value equals
    lim (n-1)! h^0_0(L^k)/k^(n-1) along the exponent progression, i.e.
    (n-1)! times the slice volume measured against the induced hyperplane
    lattice.  Computed by slicing the simplex into its crossing polygon
    and summing exact lattice-coordinate determinants.
    """
    if s.group.is_su2 or s.group.dim != 1 or len(s.factors) != 1:
        raise UnsupportedScenario("slice volumes implemented for rank-1 single factors")
    n = s.factors[0].dim
    if n > 3:
        raise UnsupportedScenario("slice volumes implemented for n <= 3")
    report = classify_stability(s)
    if report.stability != REGULAR:
        raise UnsupportedScenario(f"slice volume needs a regular scenario, got {report.stability}")

    w = [x[0] for x in s.factors[0].weights]
    d = s.bundle.degrees[0]
    c = s.bundle.twist[0]
    v = tuple(w[i] - w[0] for i in range(1, n + 1))
    t = -c - w[0] * d

    if n == 1:
        # zero-dimensional reduced point; regularity puts it inside (0, d)
        return Fraction(1)

    # vertices of {y >= 0, sum y <= d, v.y = t} on the simplex edges
    corners = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n):
        corners.append(tuple(Fraction(d) if j == i else Fraction(0) for j in range(n)))
    fvals = [sum(Fraction(vi) * yi for vi, yi in zip(v, p)) - t for p in corners]
    verts = []
    for (i, p), (j, q) in itertools.combinations(enumerate(corners), 2):
        fp, fq = fvals[i], fvals[j]
        if fp == 0 or fq == 0 or (fp > 0) == (fq > 0):
            continue  # regularity excludes corner hits
        lam = fp / (fp - fq)
        verts.append(tuple(pp + lam * (qq - pp) for pp, qq in zip(p, q)))
    verts = list(dict.fromkeys(verts))

    basis = _kernel_basis(v)
    coords = [_solve_in_basis(basis, tuple(x - y for x, y in zip(u, verts[0]))) for u in verts]
    if n == 2:
        assert len(verts) == 2
        return abs(coords[1][0])

    # order the polygon around its centroid and take the shoelace sum;
    # dh = (n-1)! * area = |sum of crosses| for n = 3
    m = len(coords)
    cen = tuple(sum(p[i] for p in coords) / m for i in range(2))
    rel = [(p[0] - cen[0], p[1] - cen[1]) for p in coords]

    def cmp(a, b):
        ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
        hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
        if ha != hb:
            return ha - hb
        cr = _cross(a, b)
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    rel.sort(key=cmp_to_key(cmp))
    acc = Fraction(0)
    for i in range(m):
        acc += _cross(rel[i], rel[(i + 1) % m])
    return abs(acc)


def vanishing_certificate(s: Scenario, mu) -> int | None:
    """Explicit r beyond which mu falls outside every r-scaled moment
    image, hence all its isotypic dimensions vanish; None when 0 lies in
    the image (no certificate)."""
    img = moment_image(s)
    if img.contains_zero():
        return None
    mu_vec = s.weight_vec(mu)
    s.check_dominant(mu)
    _, r_max = img.scale_range(mu_vec)
    if r_max is None:
        r_lo, _ = img.scale_range(mu_vec)
        if r_lo is None:
            return 1
        raise AssertionError("unbounded scale range although 0 is outside the image")
    return r_max + 1
