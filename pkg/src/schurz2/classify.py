"""Brute-force case analysis for the class containing b, and traditionality checks.

The candidate enumeration is a necessary-condition filter, not a decision
procedure: a finite candidate for the class of b does not determine a whole
partition algebra, so the filters below reject a candidate only when a
product computable from the candidate and the known first-axis classes
provably violates closure.  Accepted candidates are classified into the five
admissible shapes:

    B_singleton   {b}
    B_pm          {b, b^-1}
    B_aI0         {b, a^i0 b}               i0 != 0
    B_inv_aI1     {b, a^i1 b^-1}            i1 != 0
    B_quad        {b, a^i2 b, b^-1, a^-i2 b^-1}   i2 != 0

The filters work with three kinds of known data: the candidate D itself, its
inverse set D*, and the first-axis classes ({a^i} singletons or {a^i, a^-i}
pairs, depending on the constraint).  For each axis class s, the product
sq(s) * sq(D) must carry one constant coefficient on all of D and one on all
of D*; a zero/nonzero mismatch is a "filtration" rejection (an element of the
span separates part of the class), two distinct nonzero values are a
"duplicate-coefficient" rejection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .families import (
    Family,
    basic_set_containing,
    enumerate_window,
    orbit_generators,
    orbit_of,
    star_class,
    window_points,
)
from .fmt import fmt_class, json_class, json_lattice, json_point
from .groupring import Gpt, _check_point, format_element, gadd, simple_quantity
from .verify import detect_a_subgroups

POINT_B: Gpt = (0, 1)


@dataclass(frozen=True)
class CandidateConstraint:
    """Search box for candidates: first-axis class kind, exponent bound, max size."""

    a_class: str  # "singleton" | "symmetric"
    bound: int = 4
    max_size: int = 4

    def __post_init__(self):
        if self.a_class not in ("singleton", "symmetric"):
            raise ValueError(f"a_class must be 'singleton' or 'symmetric', got {self.a_class!r}")
        if self.bound < 1:
            raise ValueError("bound must be at least 1")
        if self.max_size < 1:
            raise ValueError("max_size must be at least 1")


@dataclass
class ShapeVerdict:
    """Outcome for one candidate: a shape with parameters, or a rejection.

    A rejection names the filter that fired in ``check`` and carries a
    machine-checkable witness (the product and its offending coefficients).
    """

    shape: str
    params: tuple[tuple[str, int], ...] = ()
    check: str | None = None
    witness: dict | None = None

    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    def to_json(self) -> dict:
        doc: dict = {"shape": self.shape, "params": self.param_dict()}
        if self.check is not None:
            doc["check"] = self.check
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


def classify_shape(points) -> ShapeVerdict:
    """Match a candidate against the five admissible shapes (no filtering)."""
    cand = frozenset(points)
    if cand == frozenset({POINT_B}):
        return ShapeVerdict("B_singleton")
    if cand == frozenset({POINT_B, (0, -1)}):
        return ShapeVerdict("B_pm")
    if len(cand) == 2 and POINT_B in cand:
        (other,) = cand - {POINT_B}
        if other[1] == 1 and other[0] != 0:
            return ShapeVerdict("B_aI0", (("i0", other[0]),))
        if other[1] == -1 and other[0] != 0:
            return ShapeVerdict("B_inv_aI1", (("i1", other[0]),))
    if len(cand) == 4 and POINT_B in cand and (0, -1) in cand:
        rest = cand - {POINT_B, (0, -1)}
        tops = [g for g in rest if g[1] == 1]
        bots = [g for g in rest if g[1] == -1]
        if len(tops) == 1 and len(bots) == 1 and tops[0][0] != 0 and bots[0] == (-tops[0][0], -1):
            return ShapeVerdict("B_quad", (("i2", tops[0][0]),))
    return ShapeVerdict("rejected", check="no-matching-shape", witness={"candidate": json_class(cand)})


def _validate_candidate(points, constraint: CandidateConstraint) -> frozenset[Gpt]:
    cand = frozenset(_check_point(g) for g in points)
    if POINT_B not in cand:
        raise ValueError("candidate must contain (0,1)")
    for i, j in cand:
        if j not in (1, -1):
            raise ValueError(f"candidate point ({i},{j}) lies outside the rows j = +-1")
        if abs(i) > constraint.bound:
            raise ValueError(f"candidate exponent {i} exceeds the bound {constraint.bound}")
    if len(cand) > constraint.max_size:
        raise ValueError(f"candidate has {len(cand)} points, above max_size={constraint.max_size}")
    return cand


def _axis_sets(constraint: CandidateConstraint) -> list[frozenset[Gpt]]:
    # exponent differences within the candidate box reach 2*bound
    reach = 2 * constraint.bound
    if constraint.a_class == "singleton":
        return [frozenset({(i, 0)}) for i in range(-reach, reach + 1)]
    return [frozenset({(i, 0), (-i, 0)}) for i in range(reach + 1)]


def filter_candidate(points, constraint: CandidateConstraint) -> ShapeVerdict:
    """Run the necessary-condition filters on one candidate for the class of b."""
    cand = _validate_candidate(points, constraint)
    if cand == frozenset({POINT_B}):
        # the filters are vacuous on a singleton
        return classify_shape(cand)
    inverse = star_class(cand)
    if cand & inverse and cand != inverse:
        return ShapeVerdict(
            "rejected",
            check="star-closure",
            witness={
                "candidate": json_class(cand),
                "inverse_set": json_class(inverse),
                "reason": "candidate meets its inverse set without equalling it",
            },
        )
    sq_cand = simple_quantity(cand)
    for axis in _axis_sets(constraint):
        product = simple_quantity(axis) * sq_cand
        for label, target in (("D", cand), ("D*", inverse)):
            values = {product.coeff(g) for g in target}
            if len(values) > 1:
                check = "filtration" if 0 in values else "duplicate-coefficient"
                return ShapeVerdict(
                    "rejected",
                    check=check,
                    witness={
                        "candidate": json_class(cand),
                        "axis_set": json_class(axis),
                        "product": format_element(product),
                        "target": label,
                        "coefficients": [
                            [json_point(g), str(product.coeff(g))] for g in sorted(target)
                        ],
                    },
                )
    return classify_shape(cand)


def _subsets_up_to(values, cap: int):
    for size in range(min(cap, len(values)) + 1):
        yield from itertools.combinations(values, size)


def enumerate_b_candidates(constraint: CandidateConstraint):
    """All surviving candidates in the box, with their shape verdicts.

    Candidates are subsets of the rows j = +-1 containing (0,1), with
    exponents in [-bound, bound] and at most max_size points; the result is
    sorted by the candidate point set.
    """
    exps = list(range(-constraint.bound, constraint.bound + 1))
    nonzero = [e for e in exps if e != 0]
    survivors = []
    for extra_top in _subsets_up_to(nonzero, constraint.max_size - 1):
        top = (0,) + extra_top
        room = constraint.max_size - len(top)
        for bottom in _subsets_up_to(exps, room):
            cand = frozenset({(x, 1) for x in top} | {(y, -1) for y in bottom})
            verdict = filter_candidate(cand, constraint)
            if verdict.shape != "rejected":
                survivors.append((cand, verdict))
    survivors.sort(key=lambda item: tuple(sorted(item[0])))
    return survivors


def singleton_class_filter(points, i0: int, j0: int) -> ShapeVerdict:
    """Restrict the class of b assuming {a^i0 b^j0} is a singleton class.

    Translating that singleton by {a^i0, a^-i0} yields the two-point set
    {a^(2*i0) b^j0, b^j0}; comparing it with the j0-th power image of the
    candidate leaves {b}, {a^n0 b, b} with 2*i0 = n0*j0, or
    {a^n1 b, a^-n1 b^-1, b, b^-1} with 2*i0 = n1*j0.
    """
    if j0 == 0:
        raise ValueError("j0 must be nonzero")
    cand = frozenset(_check_point(g) for g in points)
    if cand == frozenset({POINT_B}):
        return ShapeVerdict("B_singleton")
    witness: dict = {"candidate": json_class(cand), "i0": i0, "j0": j0}
    if len(cand) == 2 and POINT_B in cand:
        (other,) = cand - {POINT_B}
        if other[1] == 1 and other[0] != 0:
            n0 = other[0]
            if 2 * i0 == n0 * j0:
                return ShapeVerdict("B_aI0", (("n0", n0),))
            witness["reason"] = f"divisibility fails: 2*{i0} != {n0}*{j0}"
            return ShapeVerdict("rejected", check="divisibility", witness=witness)
    if len(cand) == 4 and POINT_B in cand and (0, -1) in cand:
        rest = cand - {POINT_B, (0, -1)}
        tops = [g for g in rest if g[1] == 1]
        bots = [g for g in rest if g[1] == -1]
        if len(tops) == 1 and len(bots) == 1 and tops[0][0] != 0 and bots[0] == (-tops[0][0], -1):
            n1 = tops[0][0]
            if 2 * i0 == n1 * j0:
                return ShapeVerdict("B_quad", (("n1", n1),))
            witness["reason"] = f"divisibility fails: 2*{i0} != {n1}*{j0}"
            return ShapeVerdict("rejected", check="divisibility", witness=witness)
    witness["reason"] = "not among the three shapes compatible with a singleton class"
    return ShapeVerdict("rejected", check="shape", witness=witness)


# --- traditionality of the catalog families ---------------------------------


@dataclass
class OrbitCheck:
    n: int
    verdict: str  # "not-orbit" | "orbit-compatible"
    witness: dict

    def to_json(self) -> dict:
        return {"n": self.n, "verdict": self.verdict, "witness": self.witness}


def check_not_orbit_viii(n: int) -> OrbitCheck:
    """Show type-viii:n cannot be an orbit partition.

    The pair {a, a^-1} is a class, so an orbit realization needs an
    automorphism sending a to a^-1; its image of b must stay inside the class
    of b.  Both assignments are enumerated and each fails multiplicativity:
    the computed image of ab leaves the class of ab.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    fam = Family("type-viii", n)
    class_a = basic_set_containing(fam, (1, 0))
    class_b = basic_set_containing(fam, (0, 1))
    class_ab = basic_set_containing(fam, (1, 1))
    image_a = (-1, 0)
    assignments = []
    consistent = False
    headline: dict = {}
    for image_b in sorted(class_b):
        computed = gadd(image_a, image_b)
        required = next(h for h in sorted(class_ab) if h[1] == computed[1])
        entry = {
            "image_of_a": json_point(image_a),
            "image_of_b": json_point(image_b),
            "computed_image_of_ab": json_point(computed),
            "required_image_of_ab": json_point(required),
            "consistent": computed in class_ab,
        }
        assignments.append(entry)
        consistent = consistent or entry["consistent"]
        if image_b != POINT_B:
            headline = entry
    witness = {
        "classes": {
            "a": json_class(class_a),
            "b": json_class(class_b),
            "ab": json_class(class_ab),
        },
        "note": "an automorphism fixing a has orbit {a}, not the two-point class of a",
        "assignments": assignments,
        "headline": headline,
    }
    return OrbitCheck(n, "orbit-compatible" if consistent else "not-orbit", witness)


@dataclass
class TensorCheck:
    family: str
    window: int
    verdict: str  # "not-tensor" | "tensor-compatible" | "inconclusive"
    max_class_size: int
    witness: dict

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "window": self.window,
            "verdict": self.verdict,
            "max_class_size": self.max_class_size,
            "witness": self.witness,
        }


def check_not_tensor(fam: Family, window: int) -> TensorCheck:
    """Size obstruction against a tensor decomposition, on a window.

    A tensor decomposition uses two complementary rank-1 class-union
    subgroups as factors.  If every window-verified rank-1 subgroup carries a
    two-point class while no class has four points, any decomposition would
    force a four-point product class, so the family cannot be a tensor
    product.  A family with a four-point class is reported tensor-compatible
    (the obstruction does not fire).
    """
    classes = enumerate_window(fam, window)
    max_size = max(len(cls) for cls in classes)
    if max_size >= 4:
        big = next(cls for cls in classes if len(cls) >= 4)
        return TensorCheck(
            str(fam), window, "tensor-compatible", max_size, {"size_4_class": json_class(big)}
        )
    factor_data = []
    witness_pair = None
    for lattice in detect_a_subgroups(fam, window):
        if lattice.rank != 1:
            continue
        inside = basic_set_containing(fam, lattice.basis[0])
        if len(inside) < 2 or not all(lattice.contains(g) for g in inside):
            inside = next(
                (cls for cls in classes if len(cls) >= 2 and all(lattice.contains(g) for g in cls)),
                None,
            )
        if inside is None:
            return TensorCheck(
                str(fam),
                window,
                "inconclusive",
                max_size,
                {"subgroup_without_two_point_class": json_lattice(lattice)},
            )
        outside = basic_set_containing(fam, POINT_B)
        if len(outside) < 2 or all(lattice.contains(g) for g in outside):
            outside = next(
                cls for cls in classes if len(cls) >= 2 and not all(lattice.contains(g) for g in cls)
            )
        factor_data.append(
            {
                "subgroup": json_lattice(lattice),
                "inside_class": json_class(inside),
                "complementary_class": json_class(outside),
            }
        )
        if witness_pair is None:
            witness_pair = (inside, outside)
    witness = {
        "witness_classes": [json_class(witness_pair[0]), json_class(witness_pair[1])],
        "factor_subgroups": factor_data,
        "reason": "both factors of any decomposition would carry a two-point class, "
        f"forcing a four-point product class; observed maximum class size is {max_size}",
    }
    return TensorCheck(str(fam), window, "not-tensor", max_size, witness)


def check_not_tensor_viii(n: int, window: int) -> TensorCheck:
    """Tensor obstruction for type-viii:n; the window must cover the class of b."""
    if n == 0:
        raise ValueError("n must be nonzero")
    if window < abs(n) + 1:
        raise ValueError(f"window {window} too small; need at least |n|+1 = {abs(n) + 1}")
    return check_not_tensor(Family("type-viii", n), window)


@dataclass
class WedgeCheck:
    family: str
    verdict: str  # always "wedge-impossible" over this group
    max_class_size: int
    reasoning: str

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "verdict": self.verdict,
            "max_class_size": self.max_class_size,
            "reasoning": self.reasoning,
        }


def check_not_wedge(fam: Family) -> WedgeCheck:
    """No family over Z x Z can be a wedge: class unions of infinite cosets fail."""
    if fam.rank != 2:
        raise ValueError("wedge check applies to the rank-2 families")
    max_size = max(len(cls) for cls in enumerate_window(fam, 3))
    reasoning = (
        "every nontrivial subgroup of Z x Z is infinite, so each of its cosets is "
        f"infinite; every class of {fam} is finite (at most 4 points, {max_size} observed), "
        "and a finite nonempty set is never a union of infinite cosets"
    )
    return WedgeCheck(str(fam), "wedge-impossible", max_size, reasoning)


@dataclass
class TraditionVerdict:
    family: str
    verdict: str  # "orbit" | "tensor" | "not-traditional"
    witness: dict

    def to_json(self) -> dict:
        return {
            "schema": "1",
            "family": self.family,
            "verdict": self.verdict,
            "witness": self.witness,
        }


_ORBIT_KINDS = ("discrete", "pm", "orbit-v", "orbit-vi", "orbit-vii")
_TENSOR_FACTORS = {
    "tensor-ds": ("discrete", "symmetric"),
    "tensor-sd": ("symmetric", "discrete"),
    "tensor-ss": ("symmetric", "symmetric"),
}


def is_traditional(fam: Family, window: int = 4) -> TraditionVerdict:
    """Classify a rank-2 catalog family as orbit, tensor, or not traditional.

    Orbit and tensor verdicts are backed by a window check (orbit coincidence
    resp. product structure of the classes); the type-viii verdict carries the
    three obstruction witnesses.  The "trivial" kind never applies: the group
    is infinite.
    """
    if fam.rank != 2:
        raise ValueError("traditionality verdicts apply to the rank-2 families")
    if fam.kind in _ORBIT_KINDS:
        gens = orbit_generators(fam)
        for g in window_points(fam, window):
            if orbit_of(gens, g) != basic_set_containing(fam, g):
                raise RuntimeError(f"orbit coincidence failed for {fam} at {g}")
        return TraditionVerdict(
            str(fam),
            "orbit",
            {
                "generators": [[list(row) for row in phi] for phi in gens],
                "orbit_coincidence_window": window,
            },
        )
    if fam.kind in _TENSOR_FACTORS:
        a_factor, b_factor = _TENSOR_FACTORS[fam.kind]
        for i, j in window_points(fam, window):
            expected = frozenset(
                (x, y)
                for x in ({i} if a_factor == "discrete" else {i, -i})
                for y in ({j} if b_factor == "discrete" else {j, -j})
            )
            if basic_set_containing(fam, (i, j)) != expected:
                raise RuntimeError(f"product structure failed for {fam} at {(i, j)}")
        return TraditionVerdict(
            str(fam),
            "tensor",
            {
                "factors": {"a_axis": a_factor, "b_axis": b_factor},
                "product_structure_window": window,
            },
        )
    orbit = check_not_orbit_viii(fam.n)
    tensor = check_not_tensor_viii(fam.n, max(window, abs(fam.n) + 1))
    wedge = check_not_wedge(fam)
    return TraditionVerdict(
        str(fam),
        "not-traditional",
        {
            "trivial": "inapplicable: the group is infinite",
            "orbit": orbit.to_json(),
            "tensor": tensor.to_json(),
            "wedge": wedge.to_json(),
        },
    )
