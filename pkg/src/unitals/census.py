"""Full-point census: per-pair analyses, regularity flags, table summaries.

A unital is full point regular (FPR) when, for every disjoint block pair,
the full points lie in a single block disjoint from both; strongly FPR
additionally requires a cyclic semi-regular perspectivity group.  The
aggregation mirrors the published census tables: pair rows keyed by
(full point count, group name), FPR/SFPR totals, and the breakdown of
unitals by the structure of their large (>= 3 point) full point sets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .design import AbstractUnital
from .groups import structure_name
from .nets import blocks_inside, find_dual_3nets, is_cyclic_3net
from .persp import SameBlock, full_points, persp_group

LARGE_SET_THRESHOLD = 3

FP_EMPTY = "empty"
FP_SINGLE = "single"
FP_IN_BLOCK = "in-block"
FP_NO_3_COLLINEAR = "no-3-collinear"
FP_OTHER = "other"


class NotDisjoint(ValueError):
    pass


@dataclass(frozen=True)
class PairAnalysis:
    b1: int
    b2: int
    disjoint: bool
    full_point_count: int
    group_order: int | None  # present only with >= 2 full points
    group_name: str | None
    fp_structure: str


@dataclass
class UnitalReport:
    name: str
    order: int
    is_fpr: bool
    is_fpr_strict: bool  # |F|=1 pairs also need a disjoint block through the point
    is_sfpr: bool
    embeddable_in_pg: bool  # contrapositive: non-SFPR unitals cannot embed
    pairs: list[PairAnalysis] = field(default_factory=list)
    nets: list[tuple] = field(default_factory=list)
    net_cyclic: list[bool] = field(default_factory=list)
    has_large_set: bool = False
    all_large_form_block: bool = False
    all_large_in_block: bool = False
    some_large_not_in_block: bool = False
    no_large_in_block: bool = False


def _containing_block(u: AbstractUnital, pts) -> int | None:
    """A block containing all the given points (>= 2 of them), or None."""
    c = u.block_through(pts[0], pts[1])
    return c if set(pts) <= u.block_set(c) else None


def _no_three_collinear(u: AbstractUnital, pts) -> bool:
    s = set(pts)
    return all(len(u.block_set(u.block_through(p, q)) & s) <= 2 for p, q in combinations(pts, 2))


def _classify_structure(u: AbstractUnital, fp) -> str:
    if len(fp) == 0:
        return FP_EMPTY
    if len(fp) == 1:
        return FP_SINGLE
    if _containing_block(u, fp) is not None:
        return FP_IN_BLOCK
    if _no_three_collinear(u, fp):
        return FP_NO_3_COLLINEAR
    return FP_OTHER


def analyze_pair(u: AbstractUnital, b1: int, b2: int, fp=None) -> PairAnalysis:
    if b1 == b2:
        raise SameBlock("a pair needs two distinct blocks")
    if fp is None:
        fp = full_points(u, b1, b2)
    group_order = group_name = None
    if len(fp) >= 2:
        g = persp_group(u, b1, b2, fp=fp)
        group_order = g.order()
        group_name = structure_name(g)
    return PairAnalysis(
        b1=b1,
        b2=b2,
        disjoint=u.blocks_disjoint(b1, b2),
        full_point_count=len(fp),
        group_order=group_order,
        group_name=group_name,
        fp_structure=_classify_structure(u, fp),
    )


def is_fpr_triple(u: AbstractUnital, b1: int, b2: int, fp=None, strict: bool = False) -> bool:
    """Full point regularity of one disjoint pair.

    With at most one full point the default convention is vacuously true;
    strict mode requires, for a single full point, an actual block through
    it disjoint from both.
    """
    if not u.blocks_disjoint(b1, b2):
        raise NotDisjoint(f"blocks ({b1},{b2}) are not disjoint")
    if fp is None:
        fp = full_points(u, b1, b2)
    if len(fp) == 0:
        return True
    if len(fp) == 1:
        if not strict:
            return True
        p = fp[0]
        return any(
            u.blocks_disjoint(c, b1) and u.blocks_disjoint(c, b2)
            for c in {u.block_through(p, q) for q in u.points() if q != p}
        )
    c = _containing_block(u, fp)
    return c is not None and u.blocks_disjoint(c, b1) and u.blocks_disjoint(c, b2)


def is_sfpr_triple(u: AbstractUnital, b1: int, b2: int, fp=None) -> bool:
    if not u.blocks_disjoint(b1, b2):
        raise NotDisjoint(f"blocks ({b1},{b2}) are not disjoint")
    if fp is None:
        fp = full_points(u, b1, b2)
    if not is_fpr_triple(u, b1, b2, fp=fp):
        return False
    if len(fp) <= 1:
        return True
    g = persp_group(u, b1, b2, fp=fp)
    return g.is_cyclic() and g.is_semiregular()


def all_pair_full_points(u: AbstractUnital) -> dict:
    """Full points of every disjoint block pair; the workhorse shared by
    regularity, net discovery and the census tables."""
    return {(b1, b2): full_points(u, b1, b2) for b1, b2 in u.disjoint_block_pairs()}


def classify_unital(u: AbstractUnital, name: str = "unital") -> UnitalReport:
    pair_fp = all_pair_full_points(u)

    is_fpr = is_fpr_strict = is_sfpr = True
    pairs = []
    large_in_block = []
    large_forms_block = []
    for (b1, b2), fp in pair_fp.items():
        pa = analyze_pair(u, b1, b2, fp=fp)
        pairs.append(pa)
        if not is_fpr_triple(u, b1, b2, fp=fp):
            is_fpr = False
        if is_fpr_strict and not is_fpr_triple(u, b1, b2, fp=fp, strict=True):
            is_fpr_strict = False
        if is_sfpr and not is_sfpr_triple(u, b1, b2, fp=fp):
            is_sfpr = False
        if len(fp) >= LARGE_SET_THRESHOLD:
            c = _containing_block(u, fp)
            large_in_block.append(c is not None)
            large_forms_block.append(c is not None and len(fp) == u.order + 1)

    nets = list(find_dual_3nets(u, pair_full_points=pair_fp))
    cyclic_flags = [is_cyclic_3net(u, net) for net in nets]

    has_large = bool(large_in_block)
    return UnitalReport(
        name=name,
        order=u.order,
        is_fpr=is_fpr,
        is_fpr_strict=is_fpr_strict,
        is_sfpr=is_sfpr,
        embeddable_in_pg=is_sfpr,  # necessary condition only
        pairs=pairs,
        nets=nets,
        net_cyclic=cyclic_flags,
        has_large_set=has_large,
        all_large_form_block=has_large and all(large_forms_block),
        all_large_in_block=has_large and all(large_in_block),
        some_large_not_in_block=has_large and not all(large_in_block),
        no_large_in_block=has_large and not any(large_in_block),
    )


def group_table_rows(reports) -> list[tuple[int, str, int]]:
    """Rows (full_points, group, unital count): how many unitals contain a
    disjoint pair with that many full points and that group, counting each
    unital once per row key."""
    counter: Counter = Counter()
    for rep in reports:
        keys = {
            (pa.full_point_count, pa.group_name)
            for pa in rep.pairs
            if pa.disjoint and pa.full_point_count >= 2
        }
        counter.update(keys)
    return [(fp, name, count) for (fp, name), count in sorted(counter.items())]


def totals_row(library: str, reports) -> tuple[str, int, int, int]:
    reports = list(reports)
    return (
        library,
        len(reports),
        sum(1 for r in reports if r.is_fpr),
        sum(1 for r in reports if r.is_sfpr),
    )


def large_set_rows(reports) -> list[tuple[str, str, int]]:
    """Unital counts by large full-point-set structure (the Omega/A/B/Bbar/C
    breakdown, following the published set algebra: Omega = B ∪ Bbar)."""
    reports = list(reports)
    omega = [r for r in reports if r.has_large_set]
    return [
        ("Omega", "at least one large full point set", len(omega)),
        ("A", "all large full point sets form a block", sum(1 for r in omega if r.all_large_form_block)),
        ("B", "all large full point sets are contained in a block", sum(1 for r in omega if r.all_large_in_block)),
        ("Bbar", "some large full point sets are not contained in a block", sum(1 for r in omega if r.some_large_not_in_block)),
        ("C", "no large full point set is contained in a block", sum(1 for r in omega if r.no_large_in_block)),
    ]
