"""Finite model of partition-stratified component structure.

A ComponentComplex is a finite set of irreducible components, each labeled by
a partition of a common n, plus points carrying the set of components they
lie on.  A complex is *valid* when every point's incident labels attain their
dominance meet; validity is an input contract checked by ``validate``, never
assumed.  On valid complexes each point has a well-defined minimal label
(``mu_of_point``) and a minimal lift: an incident component realizing it.

Products of complexes (one factor per tame block) carry labels combined by
``total_type`` and componentwise point incidence.
"""

from __future__ import annotations

from itertools import product as iproduct
from collections.abc import Iterable, Mapping, Sequence

from .errors import (
    EmptyInputError,
    ModelViolationError,
    ParseError,
    ResourceLimitError,
    SizeMismatchError,
    UnknownIdError,
)
from .monodromy import TameBlockSpec, spec_from_json, total_type
from .partitions import Partition, dominates, make_partition, meet_all

DEFAULT_PRODUCT_CAP = 10_000


class ComponentComplex:
    """Immutable component/point incidence structure with partition labels."""

    __slots__ = ("n", "components", "points")

    def __init__(
        self,
        n: int,
        components: Mapping[str, Partition],
        points: Mapping[str, Iterable[str]],
    ):
        if n < 1:
            raise SizeMismatchError(f"complex size must be positive, got {n}")
        comps = dict(components)
        for cid, label in comps.items():
            if label.n != n:
                raise SizeMismatchError(
                    f"component {cid!r} labeled by a partition of {label.n}, expected {n}"
                )
        pts: dict[str, frozenset[str]] = {}
        for pid, incidence in points.items():
            inc = frozenset(incidence)
            if not inc:
                raise EmptyInputError(f"point {pid!r} has empty incidence")
            unknown = inc - comps.keys()
            if unknown:
                raise UnknownIdError(
                    f"point {pid!r} references unknown components {sorted(unknown)}"
                )
            pts[pid] = inc
        self.n = n
        self.components = comps
        self.points = pts


def validate(c: ComponentComplex) -> list[str]:
    """Ids of points whose incident labels do not attain their meet (empty = ok)."""
    bad = []
    for pid in sorted(c.points):
        labels = [c.components[cid] for cid in c.points[pid]]
        if meet_all(labels) not in labels:
            bad.append(pid)
    return bad


def stratum(c: ComponentComplex, mu: Partition) -> set[str]:
    """Component ids whose label is dominated by mu."""
    if mu.n != c.n:
        raise SizeMismatchError(
            f"stratum partition sums to {mu.n}, complex size is {c.n}"
        )
    return {cid for cid, label in c.components.items() if dominates(label, mu)}


def _point_incidence(c: ComponentComplex, pid: str) -> frozenset[str]:
    try:
        return c.points[pid]
    except KeyError:
        raise UnknownIdError(f"unknown point {pid!r}") from None


def mu_of_point(c: ComponentComplex, pid: str) -> Partition:
    """Minimal incident label of the point; requires the meet to be attained."""
    inc = _point_incidence(c, pid)
    labels = [c.components[cid] for cid in inc]
    m = meet_all(labels)
    if m not in labels:
        raise ModelViolationError(f"point {pid}")
    return m


def minimal_lift(c: ComponentComplex, pid: str) -> str:
    """Lexicographically smallest incident component whose label is mu_of_point."""
    target = mu_of_point(c, pid)
    return min(cid for cid in c.points[pid] if c.components[cid] == target)


def closure_test(c: ComponentComplex, pid: str, mu: Partition) -> bool:
    """True iff the point lies on a component with label dominated by mu."""
    if mu.n != c.n:
        raise SizeMismatchError(
            f"closure partition sums to {mu.n}, complex size is {c.n}"
        )
    inc = _point_incidence(c, pid)
    return any(dominates(c.components[cid], mu) for cid in inc)


def product_complex(
    factors: Sequence[tuple[ComponentComplex, TameBlockSpec]],
    cap: int = DEFAULT_PRODUCT_CAP,
) -> ComponentComplex:
    """Product of labeled complexes, one per tame block.

    Components are tuples of factor components (ids joined with '|'), labeled
    by total_type over the tuple of labels; points are tuples of factor
    points with componentwise incidence.  Validity of the factors is not
    rechecked and does not transfer automatically: run ``validate`` on the
    result before trusting point queries.
    """
    if not factors:
        raise EmptyInputError("product of an empty factor sequence")
    comp_count = 1
    point_count = 1
    for cx, _spec in factors:
        comp_count *= len(cx.components)
        point_count *= len(cx.points)
    if comp_count > cap:
        raise ResourceLimitError(
            f"product needs {comp_count} tuple components, cap is {cap}"
        )
    if point_count > cap:
        raise ResourceLimitError(
            f"product needs {point_count} tuple points, cap is {cap}"
        )
    specs = [spec for _cx, spec in factors]
    comp_ids = [sorted(cx.components) for cx, _spec in factors]
    components: dict[str, Partition] = {}
    for tup in iproduct(*comp_ids):
        label = total_type(
            [(specs[i], factors[i][0].components[cid]) for i, cid in enumerate(tup)]
        )
        components["|".join(tup)] = label
    points: dict[str, frozenset[str]] = {}
    for ptup in iproduct(*[sorted(cx.points) for cx, _spec in factors]):
        incs = [factors[i][0].points[pid] for i, pid in enumerate(ptup)]
        points["|".join(ptup)] = frozenset(
            "|".join(ctup) for ctup in iproduct(*[sorted(i) for i in incs])
        )
    n = sum(spec.mult * spec.tau_dim * cx.n for cx, spec in factors)
    return ComponentComplex(n, components, points)


# -- JSON wire format --------------------------------------------------------


def complex_to_json(c: ComponentComplex) -> dict:
    return {
        "n": c.n,
        "components": {cid: list(label.parts) for cid, label in c.components.items()},
        "points": {pid: sorted(inc) for pid, inc in c.points.items()},
    }


def complex_from_json(doc) -> ComponentComplex:
    if not isinstance(doc, dict):
        raise ParseError("complex document must be an object")
    try:
        n = doc["n"]
        components = doc["components"]
        points = doc["points"]
    except KeyError as exc:
        raise ParseError(f"complex document missing field {exc}") from None
    if not isinstance(n, int) or not isinstance(components, dict) or not isinstance(points, dict):
        raise ParseError("complex fields have the wrong types")
    comps = {}
    for cid, parts in components.items():
        if not isinstance(parts, list):
            raise ParseError(f"label of component {cid!r} must be a list")
        comps[cid] = make_partition(parts)
    pts = {}
    for pid, inc in points.items():
        if not isinstance(inc, list) or any(not isinstance(x, str) for x in inc):
            raise ParseError(f"incidence of point {pid!r} must be a list of ids")
        pts[pid] = inc
    return ComponentComplex(n, comps, pts)


def factors_from_json(doc) -> list[tuple[ComponentComplex, TameBlockSpec]]:
    """Parse a product description: array of {"complex": ..., "spec": ...}."""
    if not isinstance(doc, list):
        raise ParseError("product document must be an array of factors")
    out = []
    for item in doc:
        if not isinstance(item, dict) or "complex" not in item or "spec" not in item:
            raise ParseError("each factor needs 'complex' and 'spec' fields")
        out.append((complex_from_json(item["complex"]), spec_from_json(item["spec"])))
    return out
