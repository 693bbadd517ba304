"""Combinatorial tilings, the tiling algebra, and permissible arcs.

Surface model
-------------
A tiling is stored as a combinatorial map.  Marked points sit on oriented
boundary components (listed anticlockwise); each point has one outgoing and
one incoming boundary segment.  Arcs have two ends; the *fan* of a marked
point lists the arc ends incident to it in anticlockwise order, between the
outgoing segment (first) and the incoming segment (last).  Unmarked boundary
components are invisible to the graph: each tile records how many it holds.

Tiles are the faces obtained by tracing the map with the interior on the
left: after arriving at a point along some edge end, the face departs along
the next end clockwise (one step back in the fan).  A directed arc traversal
(arc, d) runs from end d to end 1-d; boundary segments are traversed only in
their anticlockwise direction.

The quiver of the tiling has one vertex per arc; every anticlockwise-adjacent
pair of arc ends in a fan contributes an arrow between the corresponding
arcs.  Each arrow comes from exactly one corner of one tile, and that corner
is the angle its crossing segments cut out, so segment-profile counting keys
directly off the arrow geometry.

Arcs not in the tiling are represented by strings of the tiling algebra;
those whose string module is tau-rigid are the self-compatible permissible
arcs, and their intersection vectors are the dimension vectors.  On discs an
independent chord-geometry oracle recomputes everything and any disagreement
raises.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import UnclassifiableTileError
from .modules import StringInventory
from .quiver import Arrow, BoundQuiver, StringWord, check_gentle, \
    enumerate_strings, letter_graph_acyclic, word_vertices


# ---------------------------------------------------------------------------
# the combinatorial map and its faces


@dataclass(frozen=True)
class TileFace:
    dedges: tuple          # directed edges ("a", arc, dir) | ("s", comp, pos)
    corner_points: tuple   # corner j sits at the head of dedges[j]
    holes: int
    kind: str = ""         # I..V once classified

    @property
    def size(self):
        return len(self.dedges)

    def arc_edges(self):
        return [d for d in self.dedges if d[0] == "a"]

    def boundary_edges(self):
        return [d for d in self.dedges if d[0] == "s"]


class TilingComplex:
    """A tiling with derived faces, classification, algebra and arc machinery."""

    def __init__(self, n_points, boundary, arcs, fans, holes=None, disc=None):
        """
        n_points: number of marked points (ids 0..n_points-1)
        boundary: list of boundary components, each an anticlockwise list of
            point ids; every point appears exactly once over all components
        arcs: list of (arc_id, end0_point, end1_point)
        fans: dict point -> anticlockwise list of (arc_id, end_index)
        holes: dict (arc_id, dir) -> number of unmarked components in the
            face to the left of that traversal
        disc: optional DiscTiling this complex was built from
        """
        self.n_points = n_points
        self.boundary = [list(c) for c in boundary]
        seen_points = [p for comp in self.boundary for p in comp]
        if sorted(seen_points) != list(range(n_points)):
            raise ValueError("boundary components must cover each point once")
        self.arcs = [(str(a), int(e0), int(e1)) for a, e0, e1 in arcs]
        self.arc_index = {a: i for i, (a, _, _) in enumerate(self.arcs)}
        self.arc_ends = {a: (e0, e1) for a, e0, e1 in self.arcs}
        self.fans = {p: list(fans.get(p, ())) for p in range(n_points)}
        expected_ends = {(a, e) for a, _, _ in self.arcs for e in (0, 1)}
        placed = [tok for p in range(n_points) for tok in self.fans[p]]
        if sorted(placed) != sorted(expected_ends):
            raise ValueError("fans must place every arc end exactly once")
        for p, fan in self.fans.items():
            for a, e in fan:
                if self.arc_ends[a][e] != p:
                    raise ValueError(f"end ({a},{e}) listed at the wrong point {p}")
        self.hole_marks = dict(holes or {})
        self.disc = disc
        self._seg_of_point = {}
        for ci, comp in enumerate(self.boundary):
            for pos, p in enumerate(comp):
                self._seg_of_point[p] = (ci, pos)  # outgoing segment of p
        self.faces = []
        self.face_of_dedge = {}
        self._trace_faces()
        self._types = None
        self._algebra = None
        self._arrow_geo = None
        self._inventory = None
        self._arcs_cache = {}

    # -- face tracing -------------------------------------------------------

    def _rotation(self, p):
        return [("s-out",)] + [("e", a, e) for a, e in self.fans[p]] + [("s-in",)]

    def _dedge_head(self, d):
        if d[0] == "a":
            _, a, dr = d
            return self.arc_ends[a][1 - dr], ("e", a, 1 - dr)
        _, ci, pos = d
        comp = self.boundary[ci]
        return comp[(pos + 1) % len(comp)], ("s-in",)

    def _next_dedge(self, d):
        p, token = self._dedge_head(d)
        rot = self._rotation(p)
        idx = rot.index(token)
        dep = rot[idx - 1]
        if dep[0] == "e":
            return ("a", dep[1], dep[2]), p
        ci, pos = self._seg_of_point[p]
        return ("s", ci, pos), p

    def _trace_faces(self):
        dedges = [("a", a, d) for a, _, _ in self.arcs for d in (0, 1)]
        dedges += [("s", ci, pos) for ci, comp in enumerate(self.boundary)
                   for pos in range(len(comp))]
        remaining = set(dedges)
        raw_faces = []
        for start in dedges:
            if start not in remaining:
                continue
            cycle = []
            points = []
            d = start
            while True:
                cycle.append(d)
                remaining.discard(d)
                d2, corner_pt = self._next_dedge(d)
                points.append(corner_pt)
                d = d2
                if d == start:
                    break
            raw_faces.append((tuple(cycle), tuple(points)))
        # canonical: rotate each cycle to start at its minimal dedge, then
        # sort faces by that leading dedge
        canon = []
        for cycle, points in raw_faces:
            k = cycle.index(min(cycle))
            cyc = cycle[k:] + cycle[:k]
            pts = points[k:] + points[:k]
            canon.append((cyc, pts))
        canon.sort(key=lambda t: t[0][0])
        for fid, (cyc, pts) in enumerate(canon):
            holes = sum(self.hole_marks.get((d[1], d[2]), 0)
                        for d in cyc if d[0] == "a")
            self.faces.append(TileFace(cyc, pts, holes))
            for pos, d in enumerate(cyc):
                self.face_of_dedge[d] = (fid, pos)
        total_marks = sum(self.hole_marks.values())
        total_assigned = sum(f.holes for f in self.faces)
        if total_marks != total_assigned:
            raise ValueError("hole marks refer to unknown traversals")

    # -- classification -------------------------------------------------------

    def classify_tiles(self):
        """Type tags I..V per face id; raises on an unclassifiable face."""
        if self._types is not None:
            return self._types
        types = {}
        for fid, f in enumerate(self.faces):
            n_arc = len(f.arc_edges())
            n_seg = len(f.boundary_edges())
            size = f.size
            if size == 1 and n_arc == 1 and f.holes == 1:
                types[fid] = "I"
            elif size == 2 and n_arc == 2 and f.holes == 1:
                types[fid] = "II"
            elif size == 3 and n_seg == 2 and n_arc == 1 and f.holes == 0:
                types[fid] = "III"
            elif size >= 3 and n_seg == 1 and f.holes == 0:
                types[fid] = "IV"
            elif size >= 3 and n_seg == 0 and f.holes == 0:
                types[fid] = "V"
            else:
                raise UnclassifiableTileError(
                    f"face {fid} with {n_arc} arcs, {n_seg} boundary edges, "
                    f"{f.holes} holes is not of type I-V")
        self.faces = [TileFace(f.dedges, f.corner_points, f.holes, types[fid])
                      for fid, f in enumerate(self.faces)]
        self._types = types
        return types

    def forbidden_tile_scan(self):
        """True when no type II tile and no even-gon of type V is present."""
        types = self.classify_tiles()
        for fid, kind in types.items():
            if kind == "II":
                return False
            if kind == "V" and self.faces[fid].size % 2 == 0:
                return False
        return True

    # -- the tiling algebra ---------------------------------------------------

    def algebra(self):
        """(BoundQuiver, arrow geometry).

        Quiver vertices are the arcs in input order.  Arrow geometry maps
        each arrow id to a dict with the marked point, the corner (face id,
        corner position), and the two tile-side traversals its crossing
        segments touch.
        """
        if self._algebra is not None:
            return self._algebra, self._arrow_geo
        self.classify_tiles()
        arrows = []
        geo = {}
        rels = []
        arrow_at = {}
        is_loop_arc = {a: e0 == e1 for a, e0, e1 in self.arcs}
        for p in range(self.n_points):
            fan = self.fans[p]
            for i in range(len(fan) - 1):
                (a_src, e_src), (a_tgt, e_tgt) = fan[i], fan[i + 1]
                aid = f"r{p}_{i}"
                arrows.append(Arrow(aid, self.arc_index[a_src],
                                    self.arc_index[a_tgt]))
                src_side = (a_src, e_src)            # departs via this end
                tgt_side = (a_tgt, 1 - e_tgt)        # arrives at this end
                # the corner sits at the arrival of the target-side dedge
                corner = self.face_of_dedge[("a",) + tgt_side]
                geo[aid] = {"point": p, "corner": corner,
                            "src_side": src_side, "tgt_side": tgt_side,
                            "src_arc": a_src, "tgt_arc": a_tgt}
                arrow_at[aid] = p
        # relations: compositions at different points always vanish; through
        # a loop arc the straight-through compositions vanish while the ones
        # using the loop arrow itself survive (and the loop squares to zero)
        loop_arrow_of = {}
        for a in arrows:
            if a.src == a.tgt:
                loop_arrow_of[a.src] = a.id
        for a in arrows:
            for b in arrows:
                if a.tgt != b.src:
                    continue
                mid_arc = self.arcs[a.tgt][0]
                if arrow_at[a.id] != arrow_at[b.id]:
                    rels.append((a.id, b.id))
                elif a.id == b.id and a.src == a.tgt:
                    rels.append((a.id, a.id))
                elif is_loop_arc[mid_arc] and \
                        loop_arrow_of.get(a.tgt) not in (a.id, b.id):
                    rels.append((a.id, b.id))
        q = BoundQuiver(len(self.arcs), arrows, rels)
        cert = check_gentle(q)
        if not cert:
            raise AssertionError(
                f"tiling algebra is not gentle ({cert.violated}: {cert.witness})")
        self._algebra, self._arrow_geo = q, geo
        return q, geo

    def inventory(self) -> StringInventory:
        if self._inventory is None:
            q, _ = self.algebra()
            self._inventory = StringInventory(q)
        return self._inventory

    # -- permissible arcs -------------------------------------------------------

    def _p1_entry(self, arc_id, side):
        """P1 profile entry for an arc endpoint on the given tile side.

        side is the traversal (arc, dir) the final crossing leaves behind;
        the tile is the face left of it, and the endpoint is the unique
        vertex of that face whose permissible segment lands on this slot.
        """
        fid, pos = self.face_of_dedge[("a", side[0], side[1])]
        size = self.faces[fid].size
        corner = (pos - 2) % size
        return (fid, corner), self.faces[fid].corner_points[corner]

    def arc_from_word(self, word: StringWord):
        q, geo = self.algebra()
        letters = word.letters
        verts = word_vertices(q, word)
        p2 = []
        sides = []  # per letter: (side at left walk vertex, side at right)
        for aid, inv in letters:
            g = geo[aid]
            p2.append(g["corner"])
            if not inv:
                sides.append((g["src_side"], g["tgt_side"]))
            else:
                sides.append((g["tgt_side"], g["src_side"]))
        for i in range(len(letters) - 1):
            left = sides[i][1]
            right = sides[i + 1][0]
            if left[0] != right[0] or left[1] == right[1]:
                raise AssertionError(
                    "string crosses an arc without switching sides")
        if letters:
            first_arc = self.arcs[verts[0]][0]
            start_side = (first_arc, 1 - sides[0][0][1])
            last_arc = self.arcs[verts[-1]][0]
            end_side = (last_arc, 1 - sides[-1][1][1])
            p1_start, pt_start = self._p1_entry(first_arc, start_side)
            p1_end, pt_end = self._p1_entry(last_arc, end_side)
        else:
            arc = self.arcs[verts[0]][0]
            p1_start, pt_start = self._p1_entry(arc, (arc, 0))
            p1_end, pt_end = self._p1_entry(arc, (arc, 1))
        dims = [0] * len(self.arcs)
        for v in verts:
            dims[v] += 1
        return PermissibleArc(
            word=word,
            intersection=tuple(dims),
            p2_corners=tuple(p2),
            p1_corners=(p1_start, p1_end),
            endpoints=(pt_start, pt_end))

    def enumerate_permissible_arcs(self, cap=None):
        """Self-compatible permissible arcs, via tau-rigid strings.

        The default cap is twice the arc count plus two; when the string set
        is finite the exact longest-word bound is used instead so the list
        is complete.  A cap that truncates the enumeration warns.
        """
        q, _ = self.algebra()
        if cap in self._arcs_cache:
            return self._arcs_cache[cap]
        acyclic, longest = letter_graph_acyclic(q)
        eff_cap = cap if cap is not None else 2 * len(self.arcs) + 2
        if acyclic:
            eff_cap = min(eff_cap, longest)
        strings, truncated = enumerate_strings(q, eff_cap)
        if truncated or (not acyclic and cap is None):
            warnings.warn("arc enumeration reached the string-length cap; "
                          "the arc list may be incomplete")
        inv = self.inventory()
        arcs = [self.arc_from_word(w) for w in strings if inv.rigid(w)]
        arcs.sort(key=lambda a: (len(a.word.letters), a.word.letters, a.word.base))
        result = (arcs, truncated)
        self._arcs_cache[cap] = result
        return result

    def arcs_compatible(self, a1: "PermissibleArc", a2: "PermissibleArc"):
        """Zero crossing number, decided through tau-rigidity of the sum.

        On disc tilings the chord-interleaving answer must agree; a mismatch
        raises immediately.
        """
        inv = self.inventory()
        ok = inv.compatible(a1.word, a2.word)
        if self.disc is not None:
            geo = chords_interleave(a1.endpoints, a2.endpoints) is False
            if geo != ok:
                raise AssertionError(
                    f"module compatibility {ok} disagrees with chord "
                    f"geometry for {a1.endpoints} / {a2.endpoints}")
        return ok

    def geo_key(self, fid):
        """Stable face key usable across independently built structures."""
        f = self.faces[fid]
        edges = []
        for d in f.dedges:
            if d[0] == "a":
                edges.append(("a", d[1]))
            else:
                comp = self.boundary[d[1]]
                edges.append(("s", comp[d[2]], comp[(d[2] + 1) % len(comp)]))
        return frozenset(edges)

    def corner_point(self, corner):
        fid, pos = corner
        return self.faces[fid].corner_points[pos]


@dataclass(frozen=True)
class PermissibleArc:
    """An arc not in the tiling, encoded by its string and segment trace."""

    word: StringWord
    intersection: tuple      # crossing numbers with the arcs of the tiling
    p2_corners: tuple        # (face id, corner position) per interior segment
    p1_corners: tuple        # the two endpoint configurations
    endpoints: tuple         # marked points of the two ends

    def key(self):
        return (self.word.letters, self.word.base)


@dataclass(frozen=True)
class ArcMultiset:
    """Pairwise compatible permissible arcs with positive multiplicities."""

    items: tuple  # tuple of (PermissibleArc, multiplicity)

    def total(self):
        return sum(m for _, m in self.items)

    def intersection_vector(self, n_arcs):
        v = [0] * n_arcs
        for arc, mult in self.items:
            for i, x in enumerate(arc.intersection):
                v[i] += mult * x
        return tuple(v)


def seg_profile(t: TilingComplex, multiset: ArcMultiset):
    """Counts of crossing segments per angle and of endpoint configurations.

    Keys are ("p2", face, corner) and ("p1", face, corner); absent keys are
    zero.  Additive over multiset union by construction.
    """
    prof = {}
    for arc, mult in multiset.items:
        for corner in arc.p2_corners:
            key = ("p2",) + corner
            prof[key] = prof.get(key, 0) + mult
        for corner in arc.p1_corners:
            key = ("p1",) + corner
            prof[key] = prof.get(key, 0) + mult
    return {k: v for k, v in prof.items() if v}


def local_global_equal(t: TilingComplex, m1: ArcMultiset, m2: ArcMultiset):
    """Whether the two multisets have identical segment profiles."""
    return seg_profile(t, m1) == seg_profile(t, m2)


def intersection_vector(t: TilingComplex, arc: PermissibleArc):
    return arc.intersection


# ---------------------------------------------------------------------------
# discs


@dataclass(frozen=True)
class DiscTiling:
    """A partial triangulation of a disc with m marked boundary points.

    Chords use 1-based boundary indices and must be pairwise non-crossing
    and non-adjacent.
    """

    m: int
    chords: tuple  # tuple of (i, j) pairs, i < j

    def __post_init__(self):
        if self.m < 4:
            raise ValueError("a disc needs at least four marked points")
        norm = []
        for (i, j) in self.chords:
            i, j = min(i, j), max(i, j)
            if not (1 <= i < j <= self.m):
                raise ValueError(f"chord ({i},{j}) out of range")
            if j - i < 2 or (i == 1 and j == self.m):
                raise ValueError(f"chord ({i},{j}) joins adjacent points")
            norm.append((i, j))
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate chords")
        for a in norm:
            for b in norm:
                if a < b and chords_interleave(a, b):
                    raise ValueError(f"chords {a} and {b} cross")
        object.__setattr__(self, "chords", tuple(sorted(norm)))

    def to_complex(self) -> TilingComplex:
        m = self.m
        arcs = [(f"t{idx}", i - 1, j - 1)
                for idx, (i, j) in enumerate(self.chords)]
        fans = {p: [] for p in range(m)}
        for idx, (i, j) in enumerate(self.chords):
            fans[i - 1].append((f"t{idx}", 0))
            fans[j - 1].append((f"t{idx}", 1))
        for p in range(m):
            # anticlockwise order: nearer anticlockwise targets first
            def ccw_dist(tok):
                a, e = tok
                i, j = self.arc_ends_of(a)
                other = (j if e == 0 else i) - 1
                return (other - p) % m
            fans[p].sort(key=ccw_dist)
        return TilingComplex(m, [list(range(m))], arcs, fans, disc=self)

    def arc_ends_of(self, arc_id):
        idx = int(arc_id[1:])
        return self.chords[idx]


def chords_interleave(c1, c2):
    """Strict interleaving of two chords given by endpoint pairs (1-based)."""
    a, b = sorted(c1)
    c, d = sorted(c2)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b < d) or (c < a < d < b)


def disc_tilings(m):
    """All DiscTilings of the m-gon: every non-crossing chord subset."""
    chords = [(i, j) for i in range(1, m + 1) for j in range(i + 2, m + 1)
              if not (i == 1 and j == m)]

    def rec(idx, chosen):
        if idx == len(chords):
            yield DiscTiling(m, tuple(chosen))
            return
        yield from rec(idx + 1, chosen)
        c = chords[idx]
        if all(not chords_interleave(c, o) for o in chosen):
            chosen.append(c)
            yield from rec(idx + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def classify_tiles(t: TilingComplex):
    return t.classify_tiles()


def forbidden_tile_scan(t: TilingComplex):
    return t.forbidden_tile_scan()


def tiling_algebra(t: TilingComplex) -> BoundQuiver:
    return t.algebra()[0]


def enumerate_permissible_arcs(t: TilingComplex, cap=None):
    return t.enumerate_permissible_arcs(cap)


def arcs_compatible(t: TilingComplex, a1, a2):
    return t.arcs_compatible(a1, a2)


def b_matrix_from_triangulation(t: TilingComplex):
    """Exchange matrix of a triangulated surface: b_ij counts arrows i -> j
    minus arrows j -> i over the tile corners."""
    from .exchange import ExchangeMatrix

    q, _ = t.algebra()
    n = len(t.arcs)
    b = [[0] * n for _ in range(n)]
    for a in q.arrows.values():
        if a.src != a.tgt:
            b[a.src][a.tgt] += 1
            b[a.tgt][a.src] -= 1
    return ExchangeMatrix(tuple(tuple(r) for r in b))


# ---------------------------------------------------------------------------
# one-holed discs


def one_holed_disc_tiling(m, q_chords=()):
    """A disc with an unmarked hole, tiled by a loop and chords of the cut
    polygon.

    The loop sits at point 1 and encloses the hole; cutting along it leaves
    an (m+1)-gon whose vertices are the occurrences [1, 2, ..., m, 1'].
    `q_chords` are chords of that polygon given by occurrence indices
    0..m (0 and m both map to point 1).
    """
    if m < 2:
        raise ValueError("need at least two marked points")
    occ_point = [0] + list(range(1, m)) + [0]  # occurrence -> point id
    n_occ = m + 1

    def q_interleave(c1, c2):
        a, b = sorted(c1)
        c, d = sorted(c2)
        if len({a, b, c, d}) < 4:
            return False
        return (a < c < b < d) or (c < a < d < b)

    norm = []
    for (u, v) in q_chords:
        u, v = min(u, v), max(u, v)
        if not (0 <= u < v <= m) or v - u < 2 or (u == 0 and v == m):
            raise ValueError(f"occurrence chord ({u},{v}) is not admissible")
        norm.append((u, v))
    for a in norm:
        for b in norm:
            if a < b and q_interleave(a, b):
                raise ValueError(f"occurrence chords {a} and {b} cross")

    arcs = [("loop", 0, 0)]
    for idx, (u, v) in enumerate(norm):
        arcs.append((f"q{idx}", occ_point[u], occ_point[v]))

    # per-occurrence anticlockwise chord ends, by the disc rule inside the
    # cut polygon
    occ_tokens = {o: [] for o in range(n_occ)}
    for idx, (u, v) in enumerate(norm):
        occ_tokens[u].append((f"q{idx}", 0, v))
        occ_tokens[v].append((f"q{idx}", 1, u))
    for o in range(n_occ):
        occ_tokens[o].sort(key=lambda tok: (tok[2] - o) % n_occ)

    fans = {p: [] for p in range(m)}
    fans[0] = [(a, e) for a, e, _ in occ_tokens[0]] + \
              [("loop", 0), ("loop", 1)] + \
              [(a, e) for a, e, _ in occ_tokens[m]]
    for o in range(1, m):
        fans[occ_point[o]] = [(a, e) for a, e, _ in occ_tokens[o]]

    return TilingComplex(m, [list(range(m))], arcs, fans,
                         holes={("loop", 0): 1})


# ---------------------------------------------------------------------------
# independent chord-geometry oracle for discs


def disc_cells(disc: DiscTiling):
    """Cells of the dissection as anticlockwise vertex cycles (1-based).

    Computed by recursive splitting along chords, independently of the
    combinatorial-map face tracing.
    """
    def split(vertices, chords):
        if not chords:
            return [tuple(vertices)]
        (a, b) = chords[0]
        ia, ib = vertices.index(a), vertices.index(b)
        if ia > ib:
            ia, ib = ib, ia
        left = vertices[ia:ib + 1]
        right = vertices[ib:] + vertices[:ia + 1]
        def inside(c, part):
            return c[0] in part and c[1] in part
        rest = chords[1:]
        return split(left, [c for c in rest if inside(c, left)]) + \
            split(right, [c for c in rest if inside(c, right)])

    return split(list(range(1, disc.m + 1)), list(disc.chords))


def _cell_edges(disc, cell):
    edges = []
    k = len(cell)
    for i in range(k):
        u, v = cell[i], cell[(i + 1) % k]
        if (v - u) % disc.m == 1:
            edges.append(("s", u, v))
        else:
            edges.append(("c", (min(u, v), max(u, v))))
    return edges


def _cell_key(disc, cell):
    return frozenset(_cell_edges(disc, cell))


def _crossing_sequence(disc, p, q):
    """T-chords crossed by the arc p-q, ordered from p."""
    crossed = [c for c in disc.chords if chords_interleave((p, q), c)]

    def pos(x):
        return (x - p) % disc.m

    def sort_key(c):
        a, b = c
        # endpoint on the anticlockwise side of p..q first, partner reversed
        if pos(a) > pos(q):
            a, b = b, a
        return (pos(a), -pos(b))

    return sorted(crossed, key=sort_key)


def geometric_disc_arcs(disc: DiscTiling):
    """Permissible arcs of a disc tiling straight from chord geometry.

    Returns a list of records with endpoints, crossing vector, and profile
    entries keyed by (cell vertices, marked point); used as the independent
    oracle against the string route.
    """
    cells = disc_cells(disc)
    cell_of_edge = {}
    for cell in cells:
        for e in _cell_edges(disc, cell):
            cell_of_edge.setdefault(e, []).append(cell)

    def e_map(cell):
        # corner at cell[i] lies between edges (i-1, i); E = edge i+1
        edges = _cell_edges(disc, cell)
        k = len(cell)
        return {cell[i]: edges[(i + 1) % k] for i in range(k)}

    e_maps = {cell: e_map(cell) for cell in cells}
    chord_set = set(disc.chords)
    out = []
    for p in range(1, disc.m + 1):
        for q in range(p + 1, disc.m + 1):
            if (p, q) in chord_set or q - p < 2 or (p == 1 and q == disc.m):
                continue
            seq = _crossing_sequence(disc, p, q)
            if not seq:
                continue  # one-segment arcs have no permissible shape
            ok = True
            p2 = []
            for c1, c2 in zip(seq, seq[1:]):
                shared = set(c1) & set(c2)
                if len(shared) != 1:
                    ok = False
                    break
                w = shared.pop()
                mid = [cell for cell in cell_of_edge[("c", c1)]
                       if ("c", c2) in _cell_edges(disc, cell)]
                if len(mid) != 1:
                    ok = False
                    break
                p2.append((_cell_key(disc, mid[0]), w))
            if not ok:
                continue
            p1 = []
            for end, first in ((p, seq[0]), (q, seq[-1])):
                flank = [cell for cell in cell_of_edge[("c", first)]
                         if end in cell]
                if len(flank) != 1 or e_maps[flank[0]].get(end) != ("c", first):
                    ok = False
                    break
                p1.append((_cell_key(disc, flank[0]), end))
            if not ok:
                continue
            vec = tuple(1 if chords_interleave((p, q), c) else 0
                        for c in disc.chords)
            out.append({"endpoints": (p, q), "vector": vec,
                        "p2": tuple(p2), "p1": tuple(p1)})
    return out


def string_route_profile_keys(t: TilingComplex, arc: PermissibleArc):
    """Arc profile translated to (cell key, marked point) pairs, 1-based,
    in the vocabulary of the geometric oracle."""
    def face_key(fid):
        edges = set()
        for item in t.geo_key(fid):
            if item[0] == "a":
                e0, e1 = t.arc_ends[item[1]]
                edges.add(("c", (min(e0, e1) + 1, max(e0, e1) + 1)))
            else:
                edges.add(("s", item[1] + 1, item[2] + 1))
        return frozenset(edges)

    def conv(corner):
        return face_key(corner[0]), t.corner_point(corner) + 1

    return {"p2": tuple(conv(c) for c in arc.p2_corners),
            "p1": tuple(conv(c) for c in arc.p1_corners)}


def one_holed_disc_tilings(m):
    """All valid loop-based tilings of the one-holed disc with m points.

    Streams every non-crossing chord subset of the cut polygon whose derived
    tiles all classify to types I-V.
    """
    occ = m + 1
    chords = [(u, v) for u in range(occ) for v in range(u + 2, occ)
              if not (u == 0 and v == m)]

    def interleave(c1, c2):
        a, b = c1
        c, d = c2
        if len({a, b, c, d}) < 4:
            return False
        return (a < c < b < d) or (c < a < d < b)

    def rec(idx, chosen):
        if idx == len(chords):
            try:
                t = one_holed_disc_tiling(m, tuple(chosen))
                t.classify_tiles()
            except UnclassifiableTileError:
                return
            yield t
            return
        yield from rec(idx + 1, chosen)
        c = chords[idx]
        if all(not interleave(c, o) for o in chosen):
            chosen.append(c)
            yield from rec(idx + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def annulus_digon_tiling():
    """Four marked points on the outer boundary, two parallel arcs around
    the hole bounding a type II digon."""
    arcs = [("cL", 0, 2), ("cR", 0, 2)]
    fans = {0: [("cL", 0), ("cR", 0)], 1: [], 2: [("cR", 1), ("cL", 1)], 3: []}
    t = TilingComplex(4, [[0, 1, 2, 3]], arcs, fans)
    digon = None
    for fid, f in enumerate(t.faces):
        if f.size == 2 and len(f.arc_edges()) == 2:
            d = f.dedges[0]
            digon = (d[1], d[2])
    if digon is None:
        raise AssertionError("digon face not found")
    return TilingComplex(4, [[0, 1, 2, 3]], arcs, fans, holes={digon: 1})
