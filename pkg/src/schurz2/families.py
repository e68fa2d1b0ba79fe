"""The catalog of partition families of Z x Z with closed-form membership.

Every family partitions the group (or its first factor, for the two rank-1
families) into finite classes of at most four elements.  The class containing
``(i, j)`` is given in closed form:

    discrete     {(i,j)}
    pm           {(i,j), (-i,-j)}
    tensor-ds    {(i,j), (i,-j)}
    tensor-sd    {(i,j), (-i,j)}
    tensor-ss    {(i,j), (i,-j), (-i,j), (-i,-j)}
    orbit-v      {(i,j), (nj+i,-j)}
    orbit-vi     {(i,j), (nj-i,j)}
    orbit-vii    {(i,j), (nj-i,j), (-i,-j), (i-nj,-j)}
    type-viii    {(i,0), (-i,0)} if j = 0, else {(i,j), (nj+i,-j)}
    z-discrete   {(i,0)}            (requires j = 0)
    z-symmetric  {(i,0), (-i,0)}    (requires j = 0)

Coinciding closed-form values collapse: classes are sets, not multisets.
The integer parameter n must be nonzero and is accepted as-is, negative
values included; distinct n are distinct descriptors (use
:func:`window_equal` to compare the induced partitions on a window).

Each family except type-viii is the orbit partition of a finite group of
automorphisms of Z^2; :func:`orbit_generators` returns generators and
:func:`orbit_of` recovers classes as orbit closures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groupring import Gpt, gneg

PARAMETRIC_KINDS = ("orbit-v", "orbit-vi", "orbit-vii", "type-viii")

RANK1_KINDS = ("z-discrete", "z-symmetric")

KINDS = (
    "discrete",
    "pm",
    "tensor-ds",
    "tensor-sd",
    "tensor-ss",
) + PARAMETRIC_KINDS + RANK1_KINDS


@dataclass(frozen=True)
class Family:
    """A family descriptor: a kind plus the integer parameter where required.

    The text form is the kind itself (``pm``) or ``kind:n=<int>`` for the
    parametric kinds (``orbit-v:n=2``).
    """

    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in PARAMETRIC_KINDS:
            if self.n is None:
                raise ValueError(f"family {self.kind!r} needs a nonzero parameter n")
            if not isinstance(self.n, int) or self.n == 0:
                raise ValueError(f"family parameter n must be a nonzero integer, got {self.n!r}")
        elif self.n is not None:
            raise ValueError(f"family {self.kind!r} takes no parameter")

    @classmethod
    def parse(cls, text: str) -> "Family":
        body = text.strip()
        if ":" in body:
            kind, _, param = body.partition(":")
            if not param.startswith("n="):
                raise ValueError(f"malformed family descriptor {text!r} (expected kind:n=<int>)")
            try:
                n = int(param[2:])
            except ValueError:
                raise ValueError(f"malformed family parameter in {text!r}") from None
            return cls(kind.strip(), n)
        return cls(body)

    def __str__(self) -> str:
        if self.n is None:
            return self.kind
        return f"{self.kind}:n={self.n}"

    @property
    def rank(self) -> int:
        return 1 if self.kind in RANK1_KINDS else 2


def basic_set_containing(fam: Family, g: Gpt) -> frozenset[Gpt]:
    """The unique class of the family containing g (see the module table)."""
    i, j = g
    kind = fam.kind
    if kind in RANK1_KINDS:
        if j != 0:
            raise ValueError(f"{fam} partitions the rank-1 group only; got {g} with j != 0")
        if kind == "z-discrete":
            return frozenset({(i, 0)})
        return frozenset({(i, 0), (-i, 0)})
    n = fam.n
    if kind == "discrete":
        return frozenset({(i, j)})
    if kind == "pm":
        return frozenset({(i, j), (-i, -j)})
    if kind == "tensor-ds":
        return frozenset({(i, j), (i, -j)})
    if kind == "tensor-sd":
        return frozenset({(i, j), (-i, j)})
    if kind == "tensor-ss":
        return frozenset({(i, j), (i, -j), (-i, j), (-i, -j)})
    if kind == "orbit-v":
        return frozenset({(i, j), (n * j + i, -j)})
    if kind == "orbit-vi":
        return frozenset({(i, j), (n * j - i, j)})
    if kind == "orbit-vii":
        return frozenset({(i, j), (n * j - i, j), (-i, -j), (i - n * j, -j)})
    # type-viii
    if j == 0:
        return frozenset({(i, 0), (-i, 0)})
    return frozenset({(i, j), (n * j + i, -j)})


def class_rep(points) -> Gpt:
    """Canonical representative of a class: its lexicographically least point."""
    return min(points)


def is_basic_set(fam: Family, points) -> bool:
    """True iff the given non-empty set is exactly one class of the family."""
    points = frozenset(points)
    if not points:
        return False
    try:
        return basic_set_containing(fam, min(points)) == points
    except ValueError:
        return False


def window_points(fam: Family, window: int) -> list[Gpt]:
    """All group elements with max(|i|, |j|) <= window, in sorted order."""
    if window < 1:
        raise ValueError("window must be a positive integer")
    if fam.rank == 1:
        return [(i, 0) for i in range(-window, window + 1)]
    return [(i, j) for i in range(-window, window + 1) for j in range(-window, window + 1)]


def enumerate_window(fam: Family, window: int) -> list[frozenset[Gpt]]:
    """All distinct classes meeting the window, ordered by canonical representative."""
    seen: dict[Gpt, frozenset[Gpt]] = {}
    for g in window_points(fam, window):
        cls = basic_set_containing(fam, g)
        seen.setdefault(min(cls), cls)
    return [seen[rep] for rep in sorted(seen)]


def window_equal(fam_a: Family, fam_b: Family, window: int) -> bool:
    """Whether two descriptors induce the same partition on a window."""
    return enumerate_window(fam_a, window) == enumerate_window(fam_b, window)


# --- automorphisms of Z^2 ---------------------------------------------------

# An automorphism is a 2x2 integer matrix of determinant +-1, stored as rows
# and acting on exponent column vectors.
Aut = tuple[tuple[int, int], tuple[int, int]]

INVERSION: Aut = ((-1, 0), (0, -1))


def aut_from_images(image_a: Gpt, image_b: Gpt) -> Aut:
    """The automorphism sending (1,0) to image_a and (0,1) to image_b."""
    det = image_a[0] * image_b[1] - image_a[1] * image_b[0]
    if det not in (1, -1):
        raise ValueError(f"images {image_a}, {image_b} span a proper sublattice (det {det})")
    return ((image_a[0], image_b[0]), (image_a[1], image_b[1]))


def apply_automorphism(phi: Aut, g: Gpt) -> Gpt:
    (p, q), (r, s) = phi
    return (p * g[0] + q * g[1], r * g[0] + s * g[1])


def orbit_generators(fam: Family) -> list[Aut] | None:
    """Generators of the automorphism group whose orbits are the classes.

    An empty list means the trivial group (singleton orbits).  None means the
    family is not an orbit partition at all (type-viii).
    """
    kind = fam.kind
    n = fam.n
    if kind in ("discrete", "z-discrete"):
        return []
    if kind in ("pm", "z-symmetric"):
        return [INVERSION]
    if kind == "tensor-ds":
        return [aut_from_images((1, 0), (0, -1))]
    if kind == "tensor-sd":
        return [aut_from_images((-1, 0), (0, 1))]
    if kind == "tensor-ss":
        return [aut_from_images((1, 0), (0, -1)), aut_from_images((-1, 0), (0, 1))]
    if kind == "orbit-v":
        return [aut_from_images((1, 0), (n, -1))]
    if kind == "orbit-vi":
        return [aut_from_images((-1, 0), (n, 1))]
    if kind == "orbit-vii":
        return [aut_from_images((-1, 0), (n, 1)), INVERSION]
    return None


class InfiniteOrbitError(ValueError):
    """The orbit closure exceeded the iteration cap; the orbit is likely infinite."""


def orbit_of(gens, g: Gpt, cap: int = 64) -> frozenset[Gpt]:
    """Closure of {g} under the given automorphisms, capped at ``cap`` points."""
    seen = {g}
    frontier = [g]
    while frontier:
        h = frontier.pop()
        for phi in gens:
            image = apply_automorphism(phi, h)
            if image not in seen:
                if len(seen) >= cap:
                    raise InfiniteOrbitError(
                        f"orbit of {g} exceeded {cap} points; generators likely have infinite orbits"
                    )
                seen.add(image)
                frontier.append(image)
    return frozenset(seen)


def star_class(points) -> frozenset[Gpt]:
    """The set of inverses of a class."""
    return frozenset(gneg(g) for g in points)
