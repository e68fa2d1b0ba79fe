"""Exact verification of the partition-algebra axioms for a family.

The verifier works window-by-window: the window only bounds which classes and
class pairs are examined, never the products themselves.  Class membership is
closed-form over the whole group, so every individual check (product closure,
star closure, coefficient slices, ...) is exact and free of truncation
effects.

Every entry point accepts an optional ``membership`` override, a callable
mapping a point to its class.  The stock override builders
(:func:`split_class_membership`, :func:`merge_classes_membership`,
:func:`orbit_membership`) exist so tests can corrupt a partition or plug in
orbit closures of arbitrary automorphism lists and watch the verifier object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .families import (
    Family,
    basic_set_containing,
    orbit_of,
    star_class,
    window_points,
)
from .fmt import fmt_class, fmt_point, json_class, json_point
from .groupring import Gpt, Lattice, RingElement, gscale, simple_quantity

Membership = Callable[[Gpt], frozenset]


def _membership(fam: Family, membership: Membership | None) -> Membership:
    if membership is not None:
        return membership
    return lambda g: basic_set_containing(fam, g)


def split_class_membership(fam: Family, victim: Gpt) -> Membership:
    """Corrupt the family by splitting the class of ``victim`` off that point.

    The class C of victim (which must have at least two elements) is replaced
    by {victim} and C - {victim}; everything else is untouched.
    """
    whole = basic_set_containing(fam, victim)
    if len(whole) < 2:
        raise ValueError(f"class {fmt_class(whole)} is a singleton and cannot be split")
    rest = whole - {victim}

    def membership(g: Gpt) -> frozenset:
        if g == victim:
            return frozenset({victim})
        if g in whole:
            return rest
        return basic_set_containing(fam, g)

    return membership


def merge_classes_membership(fam: Family, g: Gpt, h: Gpt) -> Membership:
    """Corrupt the family by merging the (distinct) classes of g and h."""
    left = basic_set_containing(fam, g)
    right = basic_set_containing(fam, h)
    if left == right:
        raise ValueError("points lie in the same class; nothing to merge")
    merged = left | right

    def membership(x: Gpt) -> frozenset:
        if x in merged:
            return merged
        return basic_set_containing(fam, x)

    return membership


def orbit_membership(gens, cap: int = 64) -> Membership:
    """Membership given by orbit closures of user-supplied automorphisms."""
    return lambda g: orbit_of(gens, g, cap=cap)


def _window_classes(fam: Family, window: int, mem: Membership) -> list[frozenset[Gpt]]:
    seen: dict[Gpt, frozenset[Gpt]] = {}
    for g in window_points(fam, window):
        cls = mem(g)
        seen.setdefault(min(cls), cls)
    return [seen[rep] for rep in sorted(seen)]


class ClosureViolation(Exception):
    """A product of two classes failed to decompose into whole, constant classes."""

    def __init__(self, message: str, left, right, product: RingElement, witness_class):
        super().__init__(message)
        self.left = frozenset(left)
        self.right = frozenset(right)
        self.product = product
        self.witness_class = frozenset(witness_class)


@dataclass(frozen=True)
class StructureRow:
    """One row of structure constants: sq(left) * sq(right) as a class combination.

    ``entries`` maps the canonical representative of each touched class to its
    (positive integer) coefficient, and the reconstruction identity
    ``sum(entries[rep] * sq(class_of(rep)))`` recovers the product exactly.
    """

    left: frozenset[Gpt]
    right: frozenset[Gpt]
    entries: tuple[tuple[Gpt, int], ...]

    def entry_dict(self) -> dict[Gpt, int]:
        return dict(self.entries)

    def to_json(self) -> dict:
        return {
            "left": json_class(self.left),
            "right": json_class(self.right),
            "entries": [
                {"representative": json_point(rep), "coefficient": coeff}
                for rep, coeff in self.entries
            ],
        }


def _decompose(mem: Membership, product: RingElement):
    """Partition a product's support into classes with constant coefficients.

    Returns ``(entries, None)`` on success or ``(None, (cls, point, message))``
    naming the offending class, the point where it breaks, and why.
    """
    entries: dict[Gpt, int] = {}
    remaining = set(product.support())
    while remaining:
        g = min(remaining)
        cls = mem(g)
        coeff = product.coeff(g)
        for h in sorted(cls):
            value = product.coeff(h)
            if value != coeff:
                reason = (
                    "lies partially outside the support"
                    if value == 0
                    else f"carries coefficients {coeff} and {value}"
                )
                return None, (cls, h, f"class {fmt_class(cls)} {reason} at {fmt_point(h)}")
        entries[min(cls)] = int(coeff)
        remaining -= cls
    return tuple(sorted(entries.items())), None


def structure_constants(
    fam: Family,
    left,
    right,
    membership: Membership | None = None,
) -> StructureRow:
    """Expand sq(left) * sq(right) over the family's classes.

    Both arguments must be classes.  Raises :class:`ClosureViolation` when a
    touched class is split by the support or carries a non-constant
    coefficient (impossible for the built-in catalog, possible for corrupted
    or user-supplied memberships).
    """
    mem = _membership(fam, membership)
    left = frozenset(left)
    right = frozenset(right)
    for name, cls in (("left", left), ("right", right)):
        if not cls or mem(min(cls)) != cls:
            raise ValueError(f"{name} argument {fmt_class(cls) if cls else '{}'} is not a class of {fam}")
    product = simple_quantity(left) * simple_quantity(right)
    entries, failure = _decompose(mem, product)
    if failure is not None:
        cls, point, message = failure
        raise ClosureViolation(
            f"product {fmt_class(left)} * {fmt_class(right)} is not a class combination: {message}",
            left,
            right,
            product,
            cls,
        )
    return StructureRow(left, right, entries)


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None

    def to_json(self) -> dict:
        doc: dict = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


@dataclass
class VerificationReport:
    family: str
    window: int
    frobenius_range: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": "1",
            "family": self.family,
            "window": self.window,
            "frobenius_range": self.frobenius_range,
            "checks": [check.to_json() for check in self.checks],
            "overall": "pass" if self.overall else "fail",
        }


def verify_family(
    fam: Family,
    window: int,
    frobenius_range: int = 3,
    membership: Membership | None = None,
) -> VerificationReport:
    """Run the axiom checks over every class (pair) meeting the window.

    Checks, in order: the identity point forms its own class; the inverse set
    of every class is a class; every ordered product of two classes decomposes
    into whole classes with constant coefficients; distinct classes are
    disjoint; images of classes under the power maps m with
    1 <= |m| <= frobenius_range are unions of classes; every coefficient slice
    of every computed product is a union of classes.  Failures become report
    entries with a witness, never exceptions.
    """
    mem = _membership(fam, membership)
    report = VerificationReport(str(fam), window, frobenius_range)
    classes = _window_classes(fam, window, mem)

    identity_class = mem((0, 0))
    report.checks.append(
        CheckResult(
            "identity",
            identity_class == frozenset({(0, 0)}),
            None
            if identity_class == frozenset({(0, 0)})
            else f"class of (0,0) is {fmt_class(identity_class)}",
        )
    )

    witness = None
    for cls in classes:
        starred = star_class(cls)
        if mem(min(starred)) != starred:
            witness = (
                f"inverse set {fmt_class(starred)} of class {fmt_class(cls)} is not a class"
            )
            break
    report.checks.append(CheckResult("star-closure", witness is None, witness))

    witness = None
    products: list[tuple[frozenset, frozenset, RingElement]] = []
    for left in classes:
        for right in classes:
            product = simple_quantity(left) * simple_quantity(right)
            products.append((left, right, product))
            if witness is None:
                _, failure = _decompose(mem, product)
                if failure is not None:
                    _, _, message = failure
                    witness = f"sq{fmt_class(left)} * sq{fmt_class(right)}: {message}"
    report.checks.append(CheckResult("product-closure", witness is None, witness))

    witness = None
    for k, left in enumerate(classes):
        for right in classes[k + 1 :]:
            overlap = left & right
            if overlap:
                witness = (
                    f"classes {fmt_class(left)} and {fmt_class(right)} share {fmt_class(overlap)}"
                )
                break
        if witness:
            break
    report.checks.append(CheckResult("hadamard-closure", witness is None, witness))

    witness = None
    powers = [m for m in range(-frobenius_range, frobenius_range + 1) if m != 0]
    for m in powers:
        for cls in classes:
            image = frozenset(gscale(m, g) for g in cls)
            for h in sorted(image):
                if not mem(h) <= image:
                    witness = (
                        f"power map m={m} sends {fmt_class(cls)} to {fmt_class(image)},"
                        f" which splits the class of {fmt_point(h)}"
                    )
                    break
            if witness:
                break
        if witness:
            break
    report.checks.append(CheckResult("frobenius-closure", witness is None, witness))

    witness = None
    for left, right, product in products:
        for value in sorted(set(product.terms().values())):
            points = product.coeff_slice(value)
            for h in sorted(points):
                if not mem(h) <= points:
                    witness = (
                        f"coefficient slice {value} of sq{fmt_class(left)} * sq{fmt_class(right)}"
                        f" splits the class of {fmt_point(h)}"
                    )
                    break
            if witness:
                break
        if witness:
            break
    report.checks.append(CheckResult("schur-wielandt", witness is None, witness))

    return report


def detect_a_subgroups(
    fam: Family,
    window: int,
    membership: Membership | None = None,
) -> list[Lattice]:
    """Lattices generated by window classes that are window-verified class unions.

    A candidate lattice is kept when every class meeting the window that
    touches it is wholly contained in it.  Containment of the touching classes
    is exact (classes are finite), but only classes meeting the window are
    inspected, hence "window-verified".
    """
    mem = _membership(fam, membership)
    classes = _window_classes(fam, window, mem)
    candidates = {Lattice.span(cls) for cls in classes}
    kept = []
    for lattice in sorted(candidates, key=lambda lat: (lat.rank, lat.basis)):
        ok = True
        for cls in classes:
            touched = [g for g in cls if lattice.contains(g)]
            if touched and len(touched) != len(cls):
                ok = False
                break
        if ok:
            kept.append(lattice)
    return kept


class ProjectionError(ValueError):
    """The projection onto the second coordinate is not available or not sane."""


@dataclass(frozen=True)
class Projection:
    """Image of the family under (i, j) -> j: rank-1 classes plus the matched pattern."""

    classes: tuple[tuple[int, ...], ...]
    pattern: str  # "discrete" | "symmetric"

    def to_json(self) -> dict:
        return {"pattern": self.pattern, "classes": [list(cls) for cls in self.classes]}


def project_to_b(
    fam: Family,
    window: int,
    membership: Membership | None = None,
) -> Projection:
    """Project the window classes along (i, j) -> j and match the rank-1 pattern.

    Requires the first-factor axis to be a (window-verified) union of classes,
    so that the projection kernel is itself a class union.
    """
    if fam.rank != 2:
        raise ProjectionError(f"{fam} already lives on the rank-1 group")
    mem = _membership(fam, membership)
    axis = Lattice.span([(1, 0)])
    if axis not in detect_a_subgroups(fam, window, membership):
        raise ProjectionError(
            "projection kernel: the first-factor axis is not a union of classes"
        )
    images = {tuple(sorted({j for _, j in cls})) for cls in _window_classes(fam, window, mem)}
    classes = tuple(sorted(images))
    if all(len(img) == 1 for img in classes):
        pattern = "discrete"
    elif all(set(img) == {max(img), -max(img)} for img in classes):
        pattern = "symmetric"
    else:
        raise ProjectionError(
            f"image partition {[list(c) for c in classes]} matches neither rank-1 pattern"
        )
    return Projection(classes, pattern)
