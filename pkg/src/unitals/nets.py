"""Embedded dual k-nets and the latin squares coordinatizing dual 3-nets.

A dual k-net is a set of pairwise disjoint blocks such that the block
joining any cross-pair of points meets all of them.  Equivalently each
block beyond the first two lies wholly inside the full-point set of the
first two, which is how the search below discovers them.  A dual 3-net
yields a latin square of order n+1 whose main class (parastrophe and
isotopy closure) carries the classification: group-based or not, cyclic
or not.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .design import AbstractUnital
from .groups import group_from_cayley_table, structure_name
from .persp import full_points, persp_group


class TooFewBlocks(ValueError):
    pass


class NotA3Net(ValueError):
    pass


@dataclass(frozen=True)
class LatinSquare:
    m: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        sym = set(range(self.m))
        for r in self.rows:
            if set(r) != sym:
                raise ValueError("row is not a permutation of the symbols")
        for j in range(self.m):
            if {r[j] for r in self.rows} != sym:
                raise ValueError("column is not a permutation of the symbols")

    def serialize(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def is_dual_knet(u: AbstractUnital, blocks) -> bool:
    """Exact check of both dual k-net conditions."""
    blocks = list(blocks)
    if len(blocks) < 3:
        raise TooFewBlocks("a dual k-net needs k >= 3 blocks")
    if len(set(blocks)) != len(blocks):
        return False
    sets = [u.block_set(b) for b in blocks]
    for s1, s2 in combinations(sets, 2):
        if s1 & s2:
            return False
    for (i, si), (j, sj) in combinations(list(enumerate(sets)), 2):
        for p in si:
            for q in sj:
                joining = u.block_set(u.block_through(p, q))
                if any(len(joining & s) != 1 for s in sets):
                    return False
    return True


def blocks_inside(u: AbstractUnital, point_set) -> tuple[int, ...]:
    """Indices of blocks wholly contained in the given point set."""
    pts = sorted(point_set)
    if len(pts) < u.order + 1:
        return ()
    s = frozenset(pts)
    found = set()
    for p, q in combinations(pts, 2):
        c = u.block_through(p, q)
        if c not in found and u.block_set(c) <= s:
            found.add(c)
    return tuple(sorted(found))


def find_dual_3nets(u: AbstractUnital, pair_full_points=None) -> tuple:
    """All embedded dual 3-nets, as sorted block-index triples.

    For every disjoint pair, any block wholly inside the full-point set
    completes the pair to a 3-net.  A precomputed map (b1,b2) -> full
    points over all disjoint pairs may be supplied.
    """
    if pair_full_points is None:
        pair_full_points = {
            (b1, b2): full_points(u, b1, b2) for b1, b2 in u.disjoint_block_pairs()
        }
    nets = set()
    for (b1, b2), fp in pair_full_points.items():
        if len(fp) < u.order + 1:
            continue
        for c in blocks_inside(u, fp):
            nets.add(tuple(sorted((b1, b2, c))))
    return tuple(sorted(nets))


def max_knet_check(u: AbstractUnital, net) -> bool:
    """k <= n-1, and no full-point set of the net holds more than n-3 blocks."""
    net = tuple(net)
    if len(net) > u.order - 1:
        return False
    for b1, b2 in combinations(net, 2):
        if len(blocks_inside(u, full_points(u, b1, b2))) > u.order - 3:
            return False
    return True


def latin_square_from_3net(u: AbstractUnital, net) -> LatinSquare:
    """Coordinate latin square of a dual 3-net, rows/columns/symbols labeled
    by the sorted point order within each block."""
    net = tuple(sorted(net))
    if len(net) != 3:
        raise NotA3Net(f"need exactly 3 blocks, got {len(net)}")
    if not is_dual_knet(u, net):
        raise NotA3Net(f"blocks {net} do not form a dual 3-net")
    b1, b2, b3 = (u.block(i) for i in net)
    pos3 = {p: i for i, p in enumerate(b3)}
    s3 = u.block_set(net[2])
    m = u.order + 1
    rows = []
    for p in b1:
        row = []
        for q in b2:
            hit = u.block_set(u.block_through(p, q)) & s3
            row.append(pos3[next(iter(hit))])
        rows.append(tuple(row))
    return LatinSquare(m, tuple(rows))


def parastrophes(sq: LatinSquare) -> tuple[LatinSquare, ...]:
    """The six squares obtained by permuting the (row, column, symbol) roles."""
    triples = [(i, j, sq.rows[i][j]) for i in range(sq.m) for j in range(sq.m)]
    out = []
    seen = set()
    for perm in permutations(range(3)):
        grid = [[0] * sq.m for _ in range(sq.m)]
        for t in triples:
            grid[t[perm[0]]][t[perm[1]]] = t[perm[2]]
        rows = tuple(tuple(r) for r in grid)
        if rows not in seen:
            seen.add(rows)
            out.append(LatinSquare(sq.m, rows))
    return tuple(out)


def loop_reduction(sq: LatinSquare) -> LatinSquare:
    """Principal isotope in reduced form: first row and column are the
    identity, so the square is the table of a loop with identity 0."""
    relabel = [0] * sq.m
    for j, s in enumerate(sq.rows[0]):
        relabel[s] = j
    rows2 = [tuple(relabel[x] for x in row) for row in sq.rows]
    order = sorted(range(sq.m), key=lambda i: rows2[i][0])
    return LatinSquare(sq.m, tuple(rows2[i] for i in order))


def _is_associative(rows) -> bool:
    m = len(rows)
    return all(
        rows[rows[a][b]][c] == rows[a][rows[b][c]]
        for a in range(m)
        for b in range(m)
        for c in range(m)
    )


def is_group_based(sq: LatinSquare) -> str | None:
    """Name of the group the square is based on, or None.

    Each parastrophe is normalized to a loop; an associative loop is a
    group, and by Albert's theorem a loop isotopic to a group is isomorphic
    to it, so the test is exact for the whole main class.
    """
    for para in parastrophes(sq):
        reduced = loop_reduction(para)
        if _is_associative(reduced.rows):
            return structure_name(group_from_cayley_table(reduced.rows))
    return None


def satisfies_quadrangle_criterion(sq: LatinSquare) -> bool:
    """Independent oracle for group-basedness (Frolov's quadrangle criterion).

    Whenever two quadrangles of cells agree in three products, they agree in
    the fourth.  Uses row/column inverses to enumerate only consistent cell
    quadruples.
    """
    rows = sq.rows
    m = sq.m
    row_inv = [[0] * m for _ in range(m)]  # row_inv[a][v] = column where row a holds v
    col_inv = [[0] * m for _ in range(m)]  # col_inv[b][v] = row where column b holds v
    for a in range(m):
        for b in range(m):
            v = rows[a][b]
            row_inv[a][v] = b
            col_inv[b][v] = a
    for a1 in range(m):
        for b1 in range(m):
            v = rows[a1][b1]
            for a2 in range(m):
                b2 = row_inv[a2][v]
                for b3 in range(m):
                    b4 = row_inv[a2][rows[a1][b3]]
                    for a3 in range(m):
                        a4 = col_inv[b2][rows[a3][b1]]
                        if rows[a3][b3] != rows[a4][b4]:
                            return False
    return True


def is_cyclic_3net(u: AbstractUnital, net) -> bool:
    """True when the coordinate latin square is based on the cyclic group
    of order n+1."""
    name = is_group_based(latin_square_from_3net(u, net))
    return name == f"C{u.order + 1}"


def persp_groups_of_3net(u: AbstractUnital, net) -> dict:
    """Perspectivity groups of all six ordered block pairs of a 3-net."""
    net = tuple(sorted(net))
    out = {}
    for b1 in net:
        for b2 in net:
            if b1 != b2:
                out[(b1, b2)] = persp_group(u, b1, b2)
    return out
