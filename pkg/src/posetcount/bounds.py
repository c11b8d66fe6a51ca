"""Exponential-base bound expressions and certification by box splitting.

Every expression ``f`` maps packing fractions to a per-element base, so
that a state count is bounded by ``f(point) ** n``.  Certification covers
the expression's domain with axis-parallel boxes and, on each box, bounds
``f`` from above by substituting box corners factor by factor (each factor
is monotone or concave in its variable on the domain).  Boxes whose bound
is not below the threshold are halved along their longest side.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.special import xlogy

from .errors import DepthExceeded, DomainError
from .matching import PackingStats

THIRD = 1.0 / 3.0
EPS = 1e-12
INFLATE = 1.0 + 1e-12
DEFAULT_MAX_DEPTH = 60
DEFAULT_MAX_BOXES = 2_000_000
ATTAINED = "expression reaches the threshold inside this box"

LN3 = math.log(3.0)


@dataclass(frozen=True)
class BoundExpr:
    """A bound expression together with its (closed) domain.

    ``constraints`` are rows ``(coeffs, rhs)`` meaning ``coeffs . x <= rhs``.
    ``value`` evaluates points of shape (k, d); ``corner`` takes box lower
    and upper corners of shape (k, d) and returns upper bounds over each box.
    """

    id: str
    variables: tuple
    lower: tuple
    upper: tuple
    constraints: tuple
    value: Callable = dataclasses.field(repr=False, compare=False)
    corner: Callable = dataclasses.field(repr=False, compare=False)

    @property
    def arity(self) -> int:
        return len(self.variables)

    def restrict(self, lower=None, upper=None, extra=()) -> "BoundExpr":
        return dataclasses.replace(
            self,
            lower=tuple(lower) if lower is not None else self.lower,
            upper=tuple(upper) if upper is not None else self.upper,
            constraints=self.constraints + tuple(extra))

    def contains(self, point: Sequence[float], tol: float = EPS) -> bool:
        p = np.asarray(point, dtype=float)
        if p.shape != (self.arity,):
            return False
        if np.any(p < np.asarray(self.lower) - tol) or np.any(p > np.asarray(self.upper) + tol):
            return False
        return all(float(np.dot(c, p)) <= rhs + tol for c, rhs in self.constraints)


def _neg_xlogx_max(lo, hi):
    """Max of -u ln u over [lo, hi] (concave, peak at 1/e)."""
    u = np.clip(1.0 / math.e, lo, hi)
    return -xlogy(u, u)


# --- value and corner functions; columns are alpha, beta, gamma ---

def _tau_le_log(a, b, g):
    c = np.maximum(1.0 - 2 * a - b - g, 0.0)
    return (a * LN3 + b * math.log(5 / 3) + g * math.log(9 / 5)
            + xlogy(2 * g, c + 2 * g) - xlogy(2 * g, 2 * g))


def _tau_le(p):
    return np.exp(_tau_le_log(p[:, 0], p[:, 1], p[:, 2]))


def _tau_le_corner(lo, hi):
    c1 = np.maximum(1.0 - 2 * lo[:, 0] - lo[:, 1] - lo[:, 2], 0.0)
    g2 = hi[:, 2]
    return np.exp(hi[:, 0] * LN3 + hi[:, 1] * math.log(5 / 3) + g2 * math.log(9 / 5)
                  + xlogy(2 * g2, c1 + 2 * g2) - xlogy(2 * g2, 2 * g2))


def _pi_le(p):
    return 2 * 0.75 ** p[:, 0] * (5 / 6) ** p[:, 1] * 0.9 ** p[:, 2]


def _pi_le_corner(lo, hi):
    return _pi_le(lo)


def _gamma_zero(p):
    return 3.0 ** p[:, 0] * (5 / 3) ** p[:, 1]


def _gamma_zero_corner(lo, hi):
    return _gamma_zero(hi)


def _large(p):
    return 2 * 0.75 ** p[:, 0]


def _large_corner(lo, hi):
    return _large(lo)


def _any_matching(p):
    a = p[:, 0]
    return np.exp(a * LN3 + 4 * a * np.log1p(2 * a) - xlogy(4 * a, 4 * a))


def _any_matching_corner(lo, hi):
    a2 = hi[:, 0]
    return np.exp(a2 * LN3 + 4 * a2 * np.log1p(2 * a2) + _neg_xlogx_max(4 * lo[:, 0], 4 * a2))


def _canonical(p):
    a = p[:, 0]
    return np.exp(a * LN3 - xlogy(2 * a, 2 * a))


def _canonical_corner(lo, hi):
    return np.exp(hi[:, 0] * LN3 + _neg_xlogx_max(2 * lo[:, 0], 2 * hi[:, 0]))


def _binomial_entropy(a, b):
    """a ln a - b ln b - (a-b) ln(a-b): log of the binomial-sum base."""
    return xlogy(a, a) - xlogy(b, b) - xlogy(a - b, a - b)


def _jn_entropy(p):
    al, be = p[:, 0], p[:, 1]
    a = np.maximum(1.0 - 2 * al - be, 0.0)
    b = np.minimum(be, a)
    return np.exp((al - be) * LN3 + be * math.log(5) + _binomial_entropy(a, b))


def _jn_entropy_corner(lo, hi):
    a_max = np.maximum(1.0 - 2 * lo[:, 0] - lo[:, 1], 0.0)
    b = np.minimum(hi[:, 1], a_max / 2)
    return np.exp(hi[:, 0] * LN3 + hi[:, 1] * math.log(5 / 3) + _binomial_entropy(a_max, b))


def _jn_simple(p):
    return 2 * 0.75 ** p[:, 0] * (5 / 6) ** p[:, 1]


def _jn_simple_corner(lo, hi):
    return _jn_simple(lo)


_ORDER3 = (((0, -1, 1), 0.0), ((-1, 1, 0), 0.0), ((2, 1, 1), 1.0))
_ORDER2 = (((-1, 1), 0.0),)

EXPRESSIONS = {
    "TAU_LE": BoundExpr("TAU_LE", ("alpha", "beta", "gamma"), (0, 0, 0), (THIRD,) * 3,
                        _ORDER3 + (((2, 1, 3), 1.0),), _tau_le, _tau_le_corner),
    "PI_LE": BoundExpr("PI_LE", ("alpha", "beta", "gamma"), (0, 0, 0), (THIRD,) * 3,
                       _ORDER3 + (((-2, -1, -3), -1.0),), _pi_le, _pi_le_corner),
    "GAMMA_ZERO": BoundExpr("GAMMA_ZERO", ("alpha", "beta"), (0, 0), (THIRD, THIRD),
                            _ORDER2, _gamma_zero, _gamma_zero_corner),
    "LARGE_MATCHING": BoundExpr("LARGE_MATCHING", ("alpha",), (THIRD,), (0.5,), (),
                                _large, _large_corner),
    "LEMMA1_BOUND": BoundExpr("LEMMA1_BOUND", ("alpha",), (0,), (1 / 6,), (),
                              _any_matching, _any_matching_corner),
    "CANONICAL_BOUND": BoundExpr("CANONICAL_BOUND", ("alpha",), (0,), (0.25,), (),
                                 _canonical, _canonical_corner),
    "TAU_JN_ENTROPY": BoundExpr("TAU_JN_ENTROPY", ("alpha", "beta"), (0, 0), (THIRD, THIRD),
                                _ORDER2 + (((2, 3), 1.0),), _jn_entropy, _jn_entropy_corner),
    "TAU_JN_SIMPLE": BoundExpr("TAU_JN_SIMPLE", ("alpha", "beta"), (0, 0), (THIRD, THIRD),
                               _ORDER2 + (((-2, -3), -1.0),), _jn_simple, _jn_simple_corner),
}

_LARGE = EXPRESSIONS["LARGE_MATCHING"]

# Certification targets: the pieces whose union is certified.  The
# single-alpha bounds switch to the large-matching bound at their crossover.
TARGETS = {
    "TAU_LE": (EXPRESSIONS["TAU_LE"],),
    "PI_LE": (EXPRESSIONS["PI_LE"],),
    "GAMMA_ZERO": (EXPRESSIONS["GAMMA_ZERO"],),
    "LARGE_MATCHING": (_LARGE,),
    "LEMMA1_BOUND": (EXPRESSIONS["LEMMA1_BOUND"], _LARGE.restrict(lower=(1 / 6,))),
    "CANONICAL_BOUND": (EXPRESSIONS["CANONICAL_BOUND"], _LARGE.restrict(lower=(0.25,))),
    "TAU_JN_ENTROPY": (EXPRESSIONS["TAU_JN_ENTROPY"],),
    "TAU_JN_SIMPLE": (EXPRESSIONS["TAU_JN_SIMPLE"],),
}
ALIASES = {
    "TAU_JN": "TAU_JN_ENTROPY+TAU_JN_SIMPLE",
    "TAU_JN_ENTROPY+SIMPLE": "TAU_JN_ENTROPY+TAU_JN_SIMPLE",
    "LE_ALL": "TAU_LE+PI_LE+GAMMA_ZERO+LARGE_MATCHING",
}


def resolve_target(name: str) -> tuple:
    """Pieces of a target id; ``A+B`` certifies the union of targets A and B."""
    name = ALIASES.get(name, name)
    pieces = []
    for part in name.split("+"):
        if part not in TARGETS:
            raise KeyError(f"unknown bound expression {part!r}; known: {sorted(TARGETS)}")
        pieces.extend(TARGETS[part])
    return tuple(pieces)


def evaluate_bound(expr, point) -> float:
    """Value of ``expr`` at ``point``; DomainError outside its closed domain."""
    if isinstance(expr, str):
        expr = EXPRESSIONS[expr]
    point = tuple(float(x) for x in np.atleast_1d(point))
    if not expr.contains(point):
        raise DomainError(f"{point} outside the domain of {expr.id}")
    return float(expr.value(np.asarray([point]))[0])


def corner_bound(expr: BoundExpr, lo, hi) -> float:
    return float(expr.corner(np.asarray([lo], float), np.asarray([hi], float))[0])


# --- instance-level bases (no domain checks; limit conventions apply) ---

def _fractions(stats: PackingStats):
    return float(stats.alpha), float(stats.beta), float(stats.gamma)


def tau_le_base(stats: PackingStats) -> float:
    return float(_tau_le(np.asarray([_fractions(stats)]))[0])


def pi_le_base(stats: PackingStats) -> float:
    return float(_pi_le(np.asarray([_fractions(stats)]))[0])


def large_matching_base(stats: PackingStats) -> float:
    return 2 * 0.75 ** float(stats.alpha)


def route_base(stats: PackingStats, route: str) -> float:
    """Base of the downset bound for the poset a counting route runs on."""
    if route == "large-matching":
        return large_matching_base(stats)
    if route == "original":
        return pi_le_base(stats)
    if route == "transformed":
        return tau_le_base(stats)
    raise ValueError(f"unknown route {route!r}")


def jn_base(stats: PackingStats) -> float:
    """Base of the state bound for the restricted bump recursion."""
    al, be = float(stats.alpha), float(stats.beta)
    if stats.t == 0:
        return 3.0 ** al
    p = np.asarray([[al, be]])
    if 2 * stats.m + 3 * stats.t <= stats.n:
        return float(_jn_entropy(p)[0])
    return float(_jn_simple(p)[0])


# --- certification ---

@dataclass
class Leaf:
    expr: str
    lo: tuple
    hi: tuple
    bound: float

    def __post_init__(self):
        self.lo = tuple(float(x) for x in self.lo)
        self.hi = tuple(float(x) for x in self.hi)
        self.bound = float(self.bound)


@dataclass
class Certificate:
    expr: str
    threshold: float
    boxes_processed: int
    max_corner_bound: float
    status: str
    leaves: list = dataclasses.field(default_factory=list, repr=False)
    offending: Optional[Leaf] = None
    reason: str = ""

    @property
    def certified(self) -> bool:
        return self.status == "Certified"

    def to_text(self) -> str:
        lines = [
            f"expr {self.expr}",
            f"threshold {self.threshold!r}",
            f"status {self.status}",
            f"boxes_processed {self.boxes_processed}",
            f"max_corner_bound {self.max_corner_bound!r}",
        ]
        if self.offending is not None:
            lines.append("offending " + _leaf_line(self.offending))
            lines.append(f"reason {self.reason}")
        lines.append(f"leaves {len(self.leaves)}")
        lines.extend(_leaf_line(leaf) for leaf in self.leaves)
        return "\n".join(lines) + "\n"


def _leaf_line(leaf: Leaf) -> str:
    intervals = " ".join(f"{lo!r} {hi!r}" for lo, hi in zip(leaf.lo, leaf.hi))
    return f"{leaf.expr} {intervals} {leaf.bound!r}"


def _parse_leaf(line: str) -> Leaf:
    parts = line.split()
    nums = [float(x) for x in parts[1:]]
    return Leaf(parts[0], tuple(nums[0:-1:2]), tuple(nums[1:-1:2]), nums[-1])


def read_certificate(text: str) -> Certificate:
    header = {}
    lines = text.splitlines()
    i = 0
    while i < len(lines) and not lines[i].startswith("leaves"):
        key, _, rest = lines[i].partition(" ")
        header[key] = rest
        i += 1
    count = int(lines[i].split()[1])
    leaves = [_parse_leaf(line) for line in lines[i + 1:i + 1 + count]]
    offending = _parse_leaf(header["offending"]) if "offending" in header else None
    return Certificate(header["expr"], float(header["threshold"]), int(header["boxes_processed"]),
                       float(header["max_corner_bound"]), header["status"], leaves, offending,
                       header.get("reason", ""))


def recheck_certificate(cert: Certificate) -> bool:
    """Recompute every leaf's corner bound and compare it to the threshold."""
    for leaf in cert.leaves:
        expr = EXPRESSIONS[leaf.expr]
        bound = corner_bound(expr, leaf.lo, leaf.hi)
        if not bound * INFLATE < cert.threshold:
            return False
    return cert.certified


def _box_feasible(expr: BoundExpr, lo, hi):
    ok = np.ones(len(lo), dtype=bool)
    for coeffs, rhs in expr.constraints:
        c = np.asarray(coeffs, dtype=float)
        least = np.where(c > 0, lo * c, hi * c).sum(axis=1)
        ok &= least <= rhs + EPS
    return ok


def _points_feasible(expr: BoundExpr, pts):
    ok = np.ones(len(pts), dtype=bool)
    for coeffs, rhs in expr.constraints:
        ok &= pts @ np.asarray(coeffs, dtype=float) <= rhs + EPS
    return ok


def _certify_piece(expr, threshold, max_depth, max_boxes, leaves, counter):
    lo = np.asarray([expr.lower], dtype=float)
    hi = np.asarray([expr.upper], dtype=float)
    depth = np.zeros(1, dtype=int)
    while len(lo):
        counter[0] += len(lo)
        if counter[0] > max_boxes:
            return Leaf(expr.id, tuple(lo[0]), tuple(hi[0]), corner_bound(expr, lo[0], hi[0])), \
                "box budget exhausted"
        keep = _box_feasible(expr, lo, hi)
        lo, hi, depth = lo[keep], hi[keep], depth[keep]
        if not len(lo):
            break
        bounds = expr.corner(lo, hi)
        good = bounds * INFLATE < threshold
        for i in np.flatnonzero(good):
            leaves.append(Leaf(expr.id, tuple(lo[i]), tuple(hi[i]), float(bounds[i])))
        bad = ~good
        lo, hi, depth, bounds = lo[bad], hi[bad], depth[bad], bounds[bad]
        if not len(lo):
            break
        centers = (lo + hi) / 2
        attained = _points_feasible(expr, centers) & (expr.value(centers) >= threshold)
        if attained.any():
            i = int(np.flatnonzero(attained)[0])
            return Leaf(expr.id, tuple(lo[i]), tuple(hi[i]), float(bounds[i])), \
                ATTAINED
        deep = depth >= max_depth
        if deep.any():
            i = int(np.flatnonzero(deep)[0])
            return Leaf(expr.id, tuple(lo[i]), tuple(hi[i]), float(bounds[i])), \
                f"split depth cap {max_depth} reached"
        axis = np.argmax(hi - lo, axis=1)
        rows = np.arange(len(lo))
        mid = (lo[rows, axis] + hi[rows, axis]) / 2
        lo_right = lo.copy()
        lo_right[rows, axis] = mid
        hi_left = hi.copy()
        hi_left[rows, axis] = mid
        lo = np.concatenate([lo, lo_right])
        hi = np.concatenate([hi_left, hi])
        depth = np.concatenate([depth + 1, depth + 1])
    return None, ""


def certify_bound(expr: str, threshold: float, max_depth: int = DEFAULT_MAX_DEPTH,
                  max_boxes: int = DEFAULT_MAX_BOXES) -> Certificate:
    """Try to show ``expr < threshold`` over its whole domain.

    Returns a Certificate whose status is ``Certified`` when every leaf box
    bound is below the threshold, and ``Failed`` when the expression itself
    reaches the threshold somewhere.  Running out of split depth or box
    budget raises DepthExceeded carrying the Failed certificate.
    """
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    leaves = []
    counter = [0]
    offending, reason = None, ""
    for piece in resolve_target(expr):
        offending, reason = _certify_piece(piece, threshold, max_depth, max_boxes, leaves, counter)
        if offending is not None:
            break
    max_bound = max((leaf.bound for leaf in leaves), default=0.0)
    if offending is not None:
        max_bound = max(max_bound, offending.bound)
    status = "Certified" if offending is None else "Failed"
    cert = Certificate(expr, threshold, counter[0], max_bound, status, leaves, offending, reason)
    if offending is not None and reason != ATTAINED:
        raise DepthExceeded(f"{expr}: {reason}", cert)
    return cert
