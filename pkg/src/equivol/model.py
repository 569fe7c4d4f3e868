"""Exact scalar types, groups, spaces, linearized bundles and scenarios.

Everything downstream consumes the immutable records defined here.  All
arithmetic is exact: weights, degrees and twists are Python ints, volumes
are ``fractions.Fraction``.  Nothing in this package ever rounds.

Conventions
-----------
* A circle-power group ``(S^1)^g`` acts diagonally on a product of
  projective spaces; each homogeneous coordinate of each factor carries an
  integer weight vector of length ``g`` (``t . z_i = t^{w_i} z_i``).
* An SU(2) factor is ``P(W)`` with ``W`` a direct sum of symmetric powers
  ``Sym^{m_i}(C^2)``; the block list ``sym_powers`` records the ``m_i``.
* A linearized bundle is a multidegree (one entry >= 1 per factor) plus a
  character twist (circle powers only; SU(2) has no nontrivial characters).
* Sections transform covariantly with coordinates: the monomial
  ``z^alpha`` in ``H^0(M, L^{tensor k})`` has weight
  ``sum_i alpha_i w_i + k*c``.  The sign is pinned by a regression test on
  the rank-one action with weights (-1, 1, 1) on P^2, where the
  weight-mu monomials are exactly ``z0^(k-a-b) z1^a z2^b, a+b=(k+mu)/2``.
  The opposite convention corresponds to mu -> -mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

CIRCLE_POWER = "circle_power"
SU2 = "su2"


class ScenarioError(ValueError):
    """Malformed scenario data (dimension mismatches, bad weights, ...)."""


class UnsupportedScenario(ValueError):
    """Structurally valid input outside the supported geometry scope."""


@dataclass(frozen=True)
class GroupSpec:
    """Compact connected group: a circle power or SU(2).

    ``dim`` is the real dimension of the group (the number of circle
    factors, or 3 for SU(2)); quotient dimensions are ``n - dim``.
    """

    kind: str
    dim: int

    @staticmethod
    def circles(g: int) -> "GroupSpec":
        if g < 1:
            raise ScenarioError("circle power rank must be >= 1")
        return GroupSpec(CIRCLE_POWER, g)

    @staticmethod
    def su2() -> "GroupSpec":
        return GroupSpec(SU2, 3)

    @property
    def torus_rank(self) -> int:
        return 1 if self.kind == SU2 else self.dim

    @property
    def is_su2(self) -> bool:
        return self.kind == SU2


@dataclass(frozen=True)
class ProjectiveFactor:
    """One projective factor P^dim of the ambient product.

    Exactly one of ``weights`` / ``sym_powers`` is set, matching the group
    kind.  ``weights`` holds dim+1 integer vectors of length g;
    ``sym_powers`` holds the SU(2) block degrees m_i with
    sum(m_i + 1) = dim + 1.
    """

    dim: int
    weights: tuple[tuple[int, ...], ...] | None = None
    sym_powers: tuple[int, ...] | None = None

    def torus_weights(self) -> tuple[tuple[int, ...], ...]:
        """Per-coordinate torus weight vectors (length-1 for su2 blocks)."""
        if self.weights is not None:
            return self.weights
        out = []
        for m in self.sym_powers:
            out.extend((m - 2 * a,) for a in range(m + 1))
        return tuple(out)


@dataclass(frozen=True)
class LinearizedBundle:
    """Ample multidegree plus global character twist."""

    degrees: tuple[int, ...]
    twist: tuple[int, ...] = ()


@dataclass(frozen=True)
class Scenario:
    group: GroupSpec
    factors: tuple[ProjectiveFactor, ...]
    bundle: LinearizedBundle

    @property
    def dim(self) -> int:
        """Complex dimension n of the ambient product."""
        return sum(f.dim for f in self.factors)

    @property
    def quotient_degree(self) -> int:
        """n - g; negative only for su2 on small spaces."""
        return self.dim - self.group.dim

    @property
    def growth_degree(self) -> int:
        """Exponent used in the volume normalization: max(n - g, 0)."""
        return max(self.quotient_degree, 0)

    @property
    def negative_quotient(self) -> bool:
        return self.quotient_degree < 0

    def weight_key(self, vec: tuple[int, ...] | int):
        """Public form of a weight: plain int when 1-dimensional."""
        if isinstance(vec, int):
            return vec
        return vec[0] if len(vec) == 1 else vec

    def weight_vec(self, mu) -> tuple[int, ...]:
        """Internal vector form of a dominant weight ``mu``."""
        r = self.group.torus_rank
        if isinstance(mu, int):
            if r != 1:
                raise ScenarioError(f"weight {mu!r} must be a vector of length {r}")
            return (mu,)
        mu = tuple(int(x) for x in mu)
        if len(mu) != r:
            raise ScenarioError(f"weight {mu!r} must have length {r}")
        return mu

    def check_dominant(self, mu) -> None:
        if self.group.is_su2 and self.weight_vec(mu)[0] < 0:
            raise ScenarioError("su2 highest weights must be >= 0")


def validate_scenario(s: Scenario) -> Scenario:
    """Normalize and validate; returns the scenario or raises ScenarioError.

    Idempotent: validating a validated scenario returns an equal value.
    """
    group = s.group
    if group.kind not in (CIRCLE_POWER, SU2):
        raise ScenarioError(f"unknown group kind {group.kind!r}")
    if group.kind == SU2 and group.dim != 3:
        raise ScenarioError("su2 group has dim 3")
    if group.kind == CIRCLE_POWER and group.dim < 1:
        raise ScenarioError("circle power rank must be >= 1")
    if not s.factors:
        raise ScenarioError("scenario needs at least one projective factor")

    factors = []
    for j, f in enumerate(s.factors):
        if f.dim < 1:
            raise ScenarioError(f"factor {j}: dimension must be >= 1")
        if group.is_su2:
            if f.sym_powers is None or f.weights is not None:
                raise ScenarioError(f"factor {j}: su2 factors take sym_powers, not weight vectors")
            sym = tuple(int(m) for m in f.sym_powers)
            if any(m < 0 for m in sym):
                raise ScenarioError(f"factor {j}: symmetric powers must be >= 0")
            if sum(m + 1 for m in sym) != f.dim + 1:
                raise ScenarioError(
                    f"factor {j}: sym_powers account for ambient dimension "
                    f"{sum(m + 1 for m in sym)}, expected {f.dim + 1}"
                )
            factors.append(ProjectiveFactor(dim=f.dim, sym_powers=sym))
        else:
            if f.weights is None or f.sym_powers is not None:
                raise ScenarioError(f"factor {j}: circle factors take weight vectors")
            ws = tuple(tuple(int(x) for x in w) for w in f.weights)
            if len(ws) != f.dim + 1:
                raise ScenarioError(
                    f"factor {j}: got {len(ws)} coordinate weights, expected {f.dim + 1}"
                )
            for w in ws:
                if len(w) != group.dim:
                    raise ScenarioError(
                        f"factor {j}: weight vector {w} has length {len(w)}, expected {group.dim}"
                    )
            factors.append(ProjectiveFactor(dim=f.dim, weights=ws))

    degrees = tuple(int(d) for d in s.bundle.degrees)
    if len(degrees) != len(factors):
        raise ScenarioError(f"bundle has {len(degrees)} degrees for {len(factors)} factors")
    if any(d < 1 for d in degrees):
        raise ScenarioError("multidegrees must be >= 1 (ample)")
    twist = tuple(int(c) for c in s.bundle.twist)
    if group.is_su2:
        if any(twist):
            raise ScenarioError("su2 admits no nontrivial character twist")
        twist = ()
    else:
        if not twist:
            twist = (0,) * group.dim
        if len(twist) != group.dim:
            raise ScenarioError(f"twist {twist} must have length {group.dim}")

    return Scenario(group, tuple(factors), LinearizedBundle(degrees, twist))


def circle_scenario(weights_per_factor, degrees, twist=None, g: int | None = None) -> Scenario:
    """Build and validate a circle-power scenario.

    ``weights_per_factor`` is a list of per-factor coordinate weight lists;
    scalar weights are accepted for g=1.
    """
    norm = []
    for ws in weights_per_factor:
        norm.append(tuple((int(w),) if isinstance(w, int) else tuple(int(x) for x in w) for w in ws))
    if g is None:
        g = len(norm[0][0])
    factors = tuple(ProjectiveFactor(dim=len(ws) - 1, weights=ws) for ws in norm)
    if twist is None:
        twist = (0,) * g
    elif isinstance(twist, int):
        twist = (twist,)
    return validate_scenario(
        Scenario(GroupSpec.circles(g), factors, LinearizedBundle(tuple(degrees), tuple(twist)))
    )


def su2_scenario(sym_powers_per_factor, degrees) -> Scenario:
    factors = tuple(
        ProjectiveFactor(dim=sum(m + 1 for m in sym) - 1, sym_powers=tuple(sym))
        for sym in sym_powers_per_factor
    )
    return validate_scenario(
        Scenario(GroupSpec.su2(), factors, LinearizedBundle(tuple(degrees), ()))
    )


def tensor_power(b: LinearizedBundle, p: int) -> LinearizedBundle:
    """L^(tensor p): multidegree and twist both scale by p."""
    if p < 1:
        raise ScenarioError("tensor power must be >= 1")
    return LinearizedBundle(tuple(d * p for d in b.degrees), tuple(c * p for c in b.twist))


def tensor_product(a: LinearizedBundle, b: LinearizedBundle) -> LinearizedBundle:
    if len(a.degrees) != len(b.degrees):
        raise ScenarioError("bundles live on different products")
    return LinearizedBundle(
        tuple(x + y for x, y in zip(a.degrees, b.degrees)),
        tuple(x + y for x, y in zip(a.twist, b.twist)),
    )


def scenario_power(s: Scenario, p: int) -> Scenario:
    return Scenario(s.group, s.factors, tensor_power(s.bundle, p))


def with_bundle(s: Scenario, bundle: LinearizedBundle) -> Scenario:
    return validate_scenario(Scenario(s.group, s.factors, bundle))


def weight_of_monomial(s: Scenario, exponents, k: int | None = None):
    """Weight of the section monomial z^alpha of L^(tensor k).

    ``exponents`` lists one nonnegative integer per coordinate, factors
    concatenated in order.  The block degree of factor j must equal
    k*d_j; k is inferred from the first factor when not given.  Returns an
    int for rank-1 weights (g=1, su2), else a tuple.
    """
    alpha = tuple(int(a) for a in exponents)
    if any(a < 0 for a in alpha):
        raise ScenarioError("exponents must be >= 0")
    ncoords = sum(f.dim + 1 for f in s.factors)
    if len(alpha) != ncoords:
        raise ScenarioError(f"got {len(alpha)} exponents for {ncoords} coordinates")

    d0 = s.bundle.degrees[0]
    deg0 = sum(alpha[: s.factors[0].dim + 1])
    if k is None:
        if deg0 % d0:
            raise ScenarioError(f"factor 0 degree {deg0} is not a multiple of d_0={d0}")
        k = deg0 // d0

    r = s.group.torus_rank
    total = [k * c for c in s.bundle.twist] if s.bundle.twist else [0] * r
    pos = 0
    for j, f in enumerate(s.factors):
        ws = f.torus_weights()
        block = alpha[pos : pos + f.dim + 1]
        if sum(block) != k * s.bundle.degrees[j]:
            raise ScenarioError(
                f"factor {j} degree {sum(block)} != k*d_j = {k * s.bundle.degrees[j]}"
            )
        for a, w in zip(block, ws):
            for i in range(r):
                total[i] += a * w[i]
        pos += f.dim + 1
    return s.weight_key(tuple(total))


def scenario_to_dict(s: Scenario) -> dict:
    """Serialize to the documented scenario-document structure."""
    factors = []
    for f in s.factors:
        if f.weights is not None:
            ws = [list(w) if len(w) > 1 else w[0] for w in f.weights]
            factors.append({"dim": f.dim, "weights": ws})
        else:
            factors.append({"dim": f.dim, "sym_powers": list(f.sym_powers)})
    bundle: dict = {"degrees": list(s.bundle.degrees)}
    if s.bundle.twist:
        bundle["twist"] = list(s.bundle.twist)
    return {"group": s.group.kind, "g": s.group.dim, "factors": factors, "bundle": bundle}


def scenario_from_dict(doc: dict) -> Scenario:
    """Parse the scenario-document structure; errors name the offending field."""
    if not isinstance(doc, dict):
        raise ScenarioError("scenario document must be an object")
    for field in ("group", "g", "factors", "bundle"):
        if field not in doc:
            raise ScenarioError(f"scenario document missing field `{field}`")
    kind = doc["group"]
    if kind not in (CIRCLE_POWER, SU2):
        raise ScenarioError(f"field `group` must be '{CIRCLE_POWER}' or '{SU2}', got {kind!r}")
    g = doc["g"]
    if not isinstance(g, int) or g < 1:
        raise ScenarioError("field `g` must be a positive integer")
    group = GroupSpec(kind, g)

    raw_factors = doc["factors"]
    if not isinstance(raw_factors, list) or not raw_factors:
        raise ScenarioError("field `factors` must be a non-empty list")
    factors = []
    for j, rf in enumerate(raw_factors):
        if not isinstance(rf, dict) or "dim" not in rf:
            raise ScenarioError(f"factors[{j}] missing field `dim`")
        dim = rf["dim"]
        if "weights" in rf:
            ws = tuple(
                (int(w),) if isinstance(w, int) else tuple(int(x) for x in w)
                for w in rf["weights"]
            )
            factors.append(ProjectiveFactor(dim=dim, weights=ws))
        elif "sym_powers" in rf:
            factors.append(ProjectiveFactor(dim=dim, sym_powers=tuple(rf["sym_powers"])))
        else:
            raise ScenarioError(f"factors[{j}] needs field `weights` or `sym_powers`")

    raw_bundle = doc["bundle"]
    if not isinstance(raw_bundle, dict) or "degrees" not in raw_bundle:
        raise ScenarioError("field `bundle` missing field `degrees`")
    twist = raw_bundle.get("twist", ())
    if isinstance(twist, int):
        twist = (twist,)
    bundle = LinearizedBundle(tuple(raw_bundle["degrees"]), tuple(twist))
    return validate_scenario(Scenario(group, tuple(factors), bundle))
