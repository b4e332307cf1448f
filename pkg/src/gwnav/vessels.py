"""Modular bifurcated vessel mazes.

A maze is assembled from four blocks drawn from a versioned block library:
an entry channel, a Y-bifurcation, and one branch per side.  Blocks are
parametric (connection angle, channel width, aneurysm placement, wall
features) and are rasterized onto the 512x612 px image grid together with a
centerline graph extracted by morphological thinning.

Internally all geometry is built in a (lat, h) frame: ``lat`` is the lateral
offset from the maze's vertical center axis (positive toward the block's own
side) and ``h`` is the height above the bottom image edge, both in pixels.
The side sign is applied only when testing pixels, which makes a maze and its
left/right-swapped twin rasterize to exact horizontal mirrors.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from importlib import resources

import numpy as np
from scipy import ndimage
from scipy.spatial import cKDTree
from skimage.morphology import skeletonize

from .config import IMAGE_HEIGHT, IMAGE_WIDTH

# Block geometry constants (mm).  The published maze set specifies parameter
# ranges but not the connector footprints; these are fixed reconstructions.
ENTRY_LEN_MM = 45.0
STEM_LEN_MM = 6.0
ARM_LEN_MM = 15.0
BRANCH_LEN_MM = 62.0        # arc length of a branch block, measured from its mount
BRANCH_LEAD_MM = 10.0       # straight lead-in before the turn back to vertical
TURN_RADIUS_MM = 18.0
JOG_TURN_DEG = 24.0
JOG_RADIUS_MM = 14.0
JOG_STRAIGHT_MM = 6.0
JOG_START_MM = 34.0         # local arc position where a secondary bend starts
BUMP_RADIUS_MM = 1.5
BUMP_STATIONS_MM = (18.0, 30.0, 42.0)
ANEURYSM_EMBED_MM = 3.0     # how deep the aneurysm disk sinks into the channel
ARC_STEP_PX = 2.5
DECIMATE_STEP = 3           # keep every 3rd skeleton pixel as a graph node

VALID_FEATURES = {"secondary_bend", "empty", "wall_bumps"}
CENTER_X = (IMAGE_WIDTH - 1) / 2.0


class GeometryError(ValueError):
    """Composed geometry does not fit the image grid."""


@dataclass(frozen=True)
class BlockSpec:
    id: str
    kind: str                             # entry | bifurcation | branch
    width_mm: float
    branch_angle_deg: float | None = None
    aneurysm_offset_mm: float | None = None
    aneurysm_diameter_mm: float | None = None
    features: frozenset = frozenset()

    def __post_init__(self):
        if self.kind not in ("entry", "bifurcation", "branch"):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if not 8.0 <= self.width_mm <= 16.0:
            raise ValueError(f"{self.id}: width {self.width_mm} outside [8, 16] mm")
        if self.kind == "bifurcation":
            if self.branch_angle_deg is None or not 25.0 <= self.branch_angle_deg <= 70.0:
                raise ValueError(f"{self.id}: branch angle must lie in [25, 70] deg")
        bad = set(self.features) - VALID_FEATURES
        if bad:
            raise ValueError(f"{self.id}: unknown features {sorted(bad)}")
        if self.kind == "branch" and "empty" not in self.features:
            if self.aneurysm_offset_mm is None or not 45.0 <= self.aneurysm_offset_mm <= 65.0:
                raise ValueError(f"{self.id}: aneurysm offset must lie in [45, 65] mm")
            if self.aneurysm_diameter_mm is None or not 5.0 <= self.aneurysm_diameter_mm <= 13.0:
                raise ValueError(f"{self.id}: aneurysm diameter must lie in [5, 13] mm")

    @property
    def has_aneurysm(self) -> bool:
        return self.kind == "branch" and "empty" not in self.features


@dataclass(frozen=True)
class BlockLibrary:
    version: str
    blocks: dict

    @classmethod
    def from_dict(cls, raw: dict) -> "BlockLibrary":
        blocks = {}
        for entry in raw["blocks"]:
            spec = BlockSpec(
                id=entry["id"],
                kind=entry["kind"],
                width_mm=float(entry["width_mm"]),
                branch_angle_deg=entry.get("branch_angle_deg"),
                aneurysm_offset_mm=entry.get("aneurysm_offset_mm"),
                aneurysm_diameter_mm=entry.get("aneurysm_diameter_mm"),
                features=frozenset(entry.get("features", [])),
            )
            if spec.id in blocks:
                raise ValueError(f"duplicate block id {spec.id!r}")
            blocks[spec.id] = spec
        return cls(version=raw["version"], blocks=blocks)

    @classmethod
    def load(cls, path) -> "BlockLibrary":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def of_kind(self, kind: str) -> list:
        return sorted(b.id for b in self.blocks.values() if b.kind == kind)

    @property
    def entries(self):
        return self.of_kind("entry")

    @property
    def bifurcations(self):
        return self.of_kind("bifurcation")

    @property
    def branches(self):
        return self.of_kind("branch")

    def __getitem__(self, block_id: str) -> BlockSpec:
        try:
            return self.blocks[block_id]
        except KeyError:
            raise ValueError(f"unknown block id {block_id!r}") from None


def load_library(name: str) -> BlockLibrary:
    """Load one of the shipped libraries, ``"A"`` (training era) or ``"B"`` (novel)."""
    fname = f"library_{name.lower()}.json"
    ref = resources.files("gwnav").joinpath("libraries", fname)
    if not ref.is_file():
        raise ValueError(f"no shipped library named {name!r}")
    return BlockLibrary.from_dict(json.loads(ref.read_text()))


@dataclass(frozen=True)
class MazeSpec:
    entry_id: str
    bifurcation_id: str
    left_branch_id: str
    right_branch_id: str
    library_version: str

    @property
    def maze_id(self) -> str:
        return f"{self.entry_id}+{self.bifurcation_id}+{self.left_branch_id}+{self.right_branch_id}"

    @classmethod
    def from_maze_id(cls, maze_id: str, library_version: str) -> "MazeSpec":
        parts = maze_id.split("+")
        if len(parts) != 4:
            raise ValueError(f"malformed maze id {maze_id!r}")
        return cls(*parts, library_version=library_version)


def compose_maze(entry_id, bifurcation_id, left_id, right_id, library: BlockLibrary) -> MazeSpec:
    """Validate four block ids against a library and produce a maze spec."""
    for block_id, kind in ((entry_id, "entry"), (bifurcation_id, "bifurcation"),
                           (left_id, "branch"), (right_id, "branch")):
        block = library[block_id]
        if block.kind != kind:
            raise ValueError(f"block {block_id!r} has kind {block.kind!r}, expected {kind!r}")
    if left_id == right_id:
        raise ValueError("left and right branches must differ")
    return MazeSpec(entry_id, bifurcation_id, left_id, right_id, library.version)


def count_mazes(library: BlockLibrary) -> int:
    e, b, n = len(library.entries), len(library.bifurcations), len(library.branches)
    if e < 1 or b < 1 or n < 2:
        raise ValueError("library needs >= 1 entry, >= 1 bifurcation, >= 2 branches")
    return e * b * n * (n - 1)


def enumerate_mazes(library: BlockLibrary):
    """Yield every maze in deterministic lexicographic block-id order."""
    count_mazes(library)  # validates library shape
    for e in library.entries:
        for b in library.bifurcations:
            for l in library.branches:
                for r in library.branches:
                    if r != l:
                        yield MazeSpec(e, b, l, r, library.version)


# ---------------------------------------------------------------------------
# analytic geometry

@dataclass
class _Primitives:
    """Capsules and disks in the (lat, h) frame with a side sign each."""
    seg_a: list = field(default_factory=list)       # (lat, h) segment starts
    seg_b: list = field(default_factory=list)       # segment ends
    seg_hw: list = field(default_factory=list)      # half widths, px
    seg_side: list = field(default_factory=list)
    bumps: list = field(default_factory=list)       # (lat, h, radius, side)
    aneurysms: list = field(default_factory=list)   # (lat, h, radius, side)


def _march(start, heading, pieces, step_px=ARC_STEP_PX):
    """Trace straight/arc pieces from ``start`` at ``heading`` (radians from
    vertical, positive toward +lat).  Returns polyline vertices and headings.

    Pieces are ("straight", length_px) or ("arc", turn_rad, radius_px).
    """
    pts = [np.asarray(start, dtype=float)]
    headings = [heading]
    for piece in pieces:
        if piece[0] == "straight":
            length = piece[1]
            n = max(1, int(math.ceil(length / step_px)))
            d = np.array([math.sin(heading), math.cos(heading)])
            base = pts[-1]
            for i in range(1, n + 1):
                pts.append(base + d * (length * i / n))
                headings.append(heading)
        else:
            _, turn, radius = piece
            arc_len = abs(turn) * radius
            n = max(2, int(math.ceil(arc_len / step_px)))
            base = pts[-1]
            h0 = heading
            sign = 1.0 if turn >= 0 else -1.0
            # circle center is perpendicular to the heading, toward the turn
            center = base + radius * np.array([sign * math.cos(h0), -sign * math.sin(h0)])
            for i in range(1, n + 1):
                a = h0 + turn * i / n
                # point on circle at heading a
                pts.append(center - radius * np.array([sign * math.cos(a), -sign * math.sin(a)]))
                headings.append(a)
            heading = h0 + turn
    return pts, headings


def _point_at_arc(pts, arc_px):
    """Point and tangent at arc length ``arc_px`` along a polyline."""
    acc = 0.0
    for i in range(len(pts) - 1):
        seg = pts[i + 1] - pts[i]
        seg_len = float(np.hypot(*seg))
        if acc + seg_len >= arc_px or i == len(pts) - 2:
            t = 0.0 if seg_len == 0 else min(1.0, max(0.0, (arc_px - acc) / seg_len))
            tangent = seg / seg_len if seg_len else np.array([0.0, 1.0])
            return pts[i] + seg * t, tangent
        acc += seg_len
    return pts[-1], np.array([0.0, 1.0])


def _branch_pieces(block: BlockSpec, mount_angle_rad: float, mm2px: float):
    """Local centerline pieces of a branch mounted at ``mount_angle_rad``."""
    turn_back = ("arc", -mount_angle_rad, TURN_RADIUS_MM * mm2px)
    turn_arc_mm = mount_angle_rad * TURN_RADIUS_MM
    pieces = [("straight", BRANCH_LEAD_MM * mm2px), turn_back]
    used = BRANCH_LEAD_MM + turn_arc_mm
    if "secondary_bend" in block.features:
        jog = math.radians(JOG_TURN_DEG)
        lead = max(0.0, JOG_START_MM - used)
        pieces += [
            ("straight", lead * mm2px),
            ("arc", jog, JOG_RADIUS_MM * mm2px),
            ("straight", JOG_STRAIGHT_MM * mm2px),
            ("arc", -jog, JOG_RADIUS_MM * mm2px),
        ]
        used += lead + 2 * jog * JOG_RADIUS_MM + JOG_STRAIGHT_MM
    tail = max(2.0, BRANCH_LEN_MM - used)
    pieces.append(("straight", tail * mm2px))
    return pieces


@dataclass
class MazeGeometry:
    primitives: _Primitives
    junction: tuple                        # (lat=0, h) of the Y junction
    aneurysm_meta: list                    # (side_name, center_lat, center_h, radius_px)
    scale_mm_per_px: float


def build_geometry(spec: MazeSpec, library: BlockLibrary,
                   scale_mm_per_px: float = 0.25) -> MazeGeometry:
    if scale_mm_per_px <= 0:
        raise ValueError("scale must be positive")
    mm2px = 1.0 / scale_mm_per_px
    entry = library[spec.entry_id]
    bif = library[spec.bifurcation_id]
    prim = _Primitives()

    def add_polyline(pts, hw, side):
        for i in range(len(pts) - 1):
            prim.seg_a.append(tuple(pts[i]))
            prim.seg_b.append(tuple(pts[i + 1]))
            prim.seg_hw.append(hw)
            prim.seg_side.append(side)

    # entry channel: straight, on the center axis, flush with the bottom edge
    entry_top = ENTRY_LEN_MM * mm2px
    add_polyline([np.array([0.0, -8.0]), np.array([0.0, entry_top])],
                 entry.width_mm / 2.0 * mm2px, 1)

    # bifurcation: short stem then symmetric arms at +/- angle
    junction_h = entry_top + STEM_LEN_MM * mm2px
    add_polyline([np.array([0.0, entry_top]), np.array([0.0, junction_h])],
                 bif.width_mm / 2.0 * mm2px, 1)
    angle = math.radians(bif.branch_angle_deg)
    arm_end = np.array([math.sin(angle), math.cos(angle)]) * (ARM_LEN_MM * mm2px)
    arm_end = arm_end + np.array([0.0, junction_h])
    for side in (-1, 1):
        add_polyline([np.array([0.0, junction_h]), arm_end],
                     bif.width_mm / 2.0 * mm2px, side)

    # branches, built in the shared (lat, h) frame then tagged with their side
    aneurysm_meta = []
    for side, block_id in ((-1, spec.left_branch_id), (1, spec.right_branch_id)):
        block = library[block_id]
        hw = block.width_mm / 2.0 * mm2px
        pieces = _branch_pieces(block, angle, mm2px)
        pts, headings = _march(arm_end, angle, pieces)
        add_polyline(pts, hw, side)
        if "wall_bumps" in block.features:
            for station, bump_side in zip(BUMP_STATIONS_MM, (1.0, -1.0, 1.0)):
                p, tangent = _point_at_arc(pts, station * mm2px)
                normal = np.array([tangent[1], -tangent[0]]) * bump_side
                c = p + normal * hw
                prim.bumps.append((c[0], c[1], BUMP_RADIUS_MM * mm2px, side))
        if block.has_aneurysm:
            radius = block.aneurysm_diameter_mm / 2.0 * mm2px
            # offset is measured from the junction; the arm takes the first part
            local = (block.aneurysm_offset_mm - ARM_LEN_MM) * mm2px
            p, tangent = _point_at_arc(pts, local)
            outward = np.array([tangent[1], -tangent[0]])  # +lat side of travel
            embed = min(ANEURYSM_EMBED_MM * mm2px, radius)
            c = p + outward * (hw + radius - embed)
            prim.aneurysms.append((c[0], c[1], radius, side))
            name = "left" if side < 0 else "right"
            aneurysm_meta.append((name, c[0], c[1], radius))

    return MazeGeometry(prim, (0.0, junction_h), aneurysm_meta, scale_mm_per_px)


def _check_bounds(prim: _Primitives):
    pad = 2.0
    for a, b, hw in zip(prim.seg_a, prim.seg_b, prim.seg_hw):
        for lat, h in (a, b):
            if abs(lat) + hw > CENTER_X - pad:
                raise GeometryError("channel exceeds image width")
            if h + hw > IMAGE_HEIGHT - pad:
                raise GeometryError("channel exceeds image height")
    for lat, h, r, _ in prim.aneurysms:
        if abs(lat) + r > CENTER_X - pad or h + r > IMAGE_HEIGHT - pad or h - r < 0:
            raise GeometryError("aneurysm exceeds image bounds")


def _paint(prim: _Primitives) -> np.ndarray:
    """Rasterize primitives to the occupancy grid.

    Pixel columns enter every distance computation as q = side*(col - cx), so a
    side flip re-uses bit-identical arithmetic on mirrored pixels.
    """
    occ = np.zeros((IMAGE_HEIGHT, IMAGE_WIDTH), dtype=bool)
    cols = np.arange(IMAGE_WIDTH, dtype=float) - CENTER_X   # exact: k +/- 255.5
    heights = (IMAGE_HEIGHT - 1) - np.arange(IMAGE_HEIGHT, dtype=float)  # h per row

    def stamp_capsule(a, b, hw, side):
        la, ha = a
        lb, hb = b
        lo_lat = min(la, lb) - hw - 1
        hi_lat = max(la, lb) + hw + 1
        lo_h = min(ha, hb) - hw - 1
        hi_h = max(ha, hb) + hw + 1
        if side > 0:
            c0 = max(0, int(math.floor(CENTER_X + lo_lat)))
            c1 = min(IMAGE_WIDTH - 1, int(math.ceil(CENTER_X + hi_lat)))
        else:
            c0 = max(0, int(math.floor(CENTER_X - hi_lat)))
            c1 = min(IMAGE_WIDTH - 1, int(math.ceil(CENTER_X - lo_lat)))
        r0 = max(0, int(math.floor(IMAGE_HEIGHT - 1 - hi_h)))
        r1 = min(IMAGE_HEIGHT - 1, int(math.ceil(IMAGE_HEIGHT - 1 - lo_h)))
        if c0 > c1 or r0 > r1:
            return
        q = side * cols[c0:c1 + 1]
        hh = heights[r0:r1 + 1]
        dl = q[None, :] - la
        dh = hh[:, None] - ha
        el, eh = lb - la, hb - ha
        denom = el * el + eh * eh
        if denom == 0:
            d2 = dl * dl + dh * dh
        else:
            t = np.clip((dl * el + dh * eh) / denom, 0.0, 1.0)
            rl = dl - t * el
            rh = dh - t * eh
            d2 = rl * rl + rh * rh
        occ[r0:r1 + 1, c0:c1 + 1] |= d2 <= hw * hw

    def stamp_disk(lat, h, radius, side, add):
        lo_lat, hi_lat = lat - radius - 1, lat + radius + 1
        if side > 0:
            c0 = max(0, int(math.floor(CENTER_X + lo_lat)))
            c1 = min(IMAGE_WIDTH - 1, int(math.ceil(CENTER_X + hi_lat)))
        else:
            c0 = max(0, int(math.floor(CENTER_X - hi_lat)))
            c1 = min(IMAGE_WIDTH - 1, int(math.ceil(CENTER_X - lo_lat)))
        r0 = max(0, int(math.floor(IMAGE_HEIGHT - 1 - (h + radius + 1))))
        r1 = min(IMAGE_HEIGHT - 1, int(math.ceil(IMAGE_HEIGHT - 1 - (h - radius - 1))))
        if c0 > c1 or r0 > r1:
            return
        q = side * cols[c0:c1 + 1]
        hh = heights[r0:r1 + 1]
        dl = q[None, :] - lat
        dh = hh[:, None] - h
        inside = dl * dl + dh * dh <= radius * radius
        if add:
            occ[r0:r1 + 1, c0:c1 + 1] |= inside
        else:
            occ[r0:r1 + 1, c0:c1 + 1] &= ~inside

    for a, b, hw, side in zip(prim.seg_a, prim.seg_b, prim.seg_hw, prim.seg_side):
        stamp_capsule(a, b, hw, side)
    for lat, h, r, side in prim.bumps:
        stamp_disk(lat, h, r, side, add=False)
    for lat, h, r, side in prim.aneurysms:
        stamp_disk(lat, h, r, side, add=True)
    return occ


# ---------------------------------------------------------------------------
# rasterized map with centerline graph

@dataclass(frozen=True)
class Aneurysm:
    center: tuple          # (x, y) px
    radius_px: float
    side: str              # "left" | "right"

    def distance_to_boundary_px(self, point) -> float:
        d = math.hypot(point[0] - self.center[0], point[1] - self.center[1])
        return max(0.0, d - self.radius_px)

    def contains(self, point) -> bool:
        d = math.hypot(point[0] - self.center[0], point[1] - self.center[1])
        return d <= self.radius_px


@dataclass
class VesselMap:
    maze_id: str
    occupancy: np.ndarray          # (H, W) bool
    nodes: np.ndarray              # (N, 2) float, (x, y) px
    neighbors: list                # adjacency: node id -> list of (node id, halfwidth px)
    node_halfwidth: np.ndarray     # (N,) float px
    node_depth: np.ndarray         # (N,) int, BFS depth from entry node
    entry_node: int
    junction_xy: tuple
    aneurysms: tuple
    pixel_owner: np.ndarray        # (H, W) int32, owning node id, -1 outside
    scale_mm_per_px: float

    @property
    def lumen_area(self) -> int:
        return int(self.occupancy.sum())

    @property
    def shape(self):
        return self.occupancy.shape

    def px_to_mm(self, v):
        return v * self.scale_mm_per_px

    def mm_to_px(self, v):
        return v / self.scale_mm_per_px

    def nearest_node(self, point) -> int:
        d = np.hypot(self.nodes[:, 0] - point[0], self.nodes[:, 1] - point[1])
        return int(np.argmin(d))

    def aneurysm_node(self, index: int) -> int:
        return self.nearest_node(self.aneurysms[index].center)


def _skeleton_graph(occ: np.ndarray):
    """Thin the lumen and turn the skeleton into a decimated node graph."""
    skel = skeletonize(occ)
    rows, cols = np.nonzero(skel)
    if rows.size == 0:
        raise GeometryError("empty skeleton")
    index = -np.ones(occ.shape, dtype=np.int64)
    order = np.lexsort((cols, rows))
    rows, cols = rows[order], cols[order]
    index[rows, cols] = np.arange(rows.size)

    offsets = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)]
    nbrs = [[] for _ in range(rows.size)]
    for k in range(rows.size):
        r, c = rows[k], cols[k]
        for dr, dc in offsets:
            rr, cc = r + dr, c + dc
            if 0 <= rr < occ.shape[0] and 0 <= cc < occ.shape[1] and index[rr, cc] >= 0:
                nbrs[k].append(int(index[rr, cc]))

    # BFS from the skeleton pixel nearest the entry port at the bottom center
    port = (CENTER_X, occ.shape[0] - 1)
    d_port = np.hypot(cols - port[0], rows - port[1])
    start = int(np.argmin(d_port))
    depth = np.full(rows.size, -1, dtype=np.int64)
    depth[start] = 0
    queue = deque([start])
    while queue:
        k = queue.popleft()
        for j in nbrs[k]:
            if depth[j] < 0:
                depth[j] = depth[k] + 1
                queue.append(j)

    degree = np.array([len(n) for n in nbrs])
    keep = (degree != 2) | (depth % DECIMATE_STEP == 0) | (depth < 0)
    keep_ids = np.nonzero(keep)[0]
    remap = -np.ones(rows.size, dtype=np.int64)
    remap[keep_ids] = np.arange(keep_ids.size)

    edt = ndimage.distance_transform_edt(occ)
    hw_px = edt[rows, cols]

    # connect kept pixels through chains of dropped ones
    adjacency = [dict() for _ in range(keep_ids.size)]
    for k in keep_ids:
        for first in nbrs[k]:
            prev, cur = k, first
            min_hw = min(hw_px[k], hw_px[cur])
            steps = 0
            while not keep[cur] and steps < rows.size:
                nxt = [j for j in nbrs[cur] if j != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                min_hw = min(min_hw, hw_px[cur])
                steps += 1
            if keep[cur] and cur != k:
                a, b = int(remap[k]), int(remap[cur])
                w = min(min_hw, adjacency[a].get(b, np.inf))
                adjacency[a][b] = w
                adjacency[b][a] = w

    nodes = np.stack([cols[keep_ids].astype(float), rows[keep_ids].astype(float)], axis=1)
    neighbors = [sorted((j, w) for j, w in adj.items()) for adj in adjacency]
    node_hw = hw_px[keep_ids].astype(float)
    entry_node = int(remap[start]) if keep[start] else int(remap[nbrs[start][0]])
    return nodes, neighbors, node_hw, entry_node


def rasterize(spec: MazeSpec, library: BlockLibrary,
              scale_mm_per_px: float = 0.25) -> VesselMap:
    """Rasterize a composed maze to a 512x612 occupancy grid plus centerline graph."""
    geo = build_geometry(spec, library, scale_mm_per_px)
    _check_bounds(geo.primitives)
    occ = _paint(geo.primitives)

    nodes, neighbors, node_hw, entry_node = _skeleton_graph(occ)

    # BFS depth over the decimated graph, deterministic by node id
    depth = np.full(len(nodes), -1, dtype=np.int64)
    depth[entry_node] = 0
    queue = deque([entry_node])
    while queue:
        k = queue.popleft()
        for j, _ in neighbors[k]:
            if depth[j] < 0:
                depth[j] = depth[k] + 1
                queue.append(j)

    # every lumen pixel is owned by its nearest centerline node
    tree = cKDTree(nodes)
    ys, xs = np.nonzero(occ)
    _, owner_ids = tree.query(np.stack([xs, ys], axis=1).astype(float), k=1)
    pixel_owner = np.full(occ.shape, -1, dtype=np.int32)
    pixel_owner[ys, xs] = owner_ids.astype(np.int32)

    aneurysms = []
    for name, lat, h, radius in geo.aneurysm_meta:
        side_sign = -1.0 if name == "left" else 1.0
        x = CENTER_X + side_sign * lat
        y = (IMAGE_HEIGHT - 1) - h
        aneurysms.append(Aneurysm(center=(float(x), float(y)), radius_px=float(radius), side=name))

    jx = CENTER_X
    jy = (IMAGE_HEIGHT - 1) - geo.junction[1]
    return VesselMap(
        maze_id=spec.maze_id,
        occupancy=occ,
        nodes=nodes,
        neighbors=neighbors,
        node_halfwidth=node_hw,
        node_depth=depth,
        entry_node=entry_node,
        junction_xy=(float(jx), float(jy)),
        aneurysms=tuple(aneurysms),
        pixel_owner=pixel_owner,
        scale_mm_per_px=scale_mm_per_px,
    )


def centerline_path(vmap: VesselMap, start_node: int, target_aneurysm: int) -> np.ndarray:
    """Breadth-first shortest node path from ``start_node`` to the aneurysm
    center node; ties broken by smaller node id.  Returns waypoints (M, 2) px.
    """
    goal = vmap.aneurysm_node(target_aneurysm)
    parent = {start_node: -1}
    queue = deque([start_node])
    while queue:
        k = queue.popleft()
        if k == goal:
            break
        for j, _ in vmap.neighbors[k]:   # neighbors sorted by id: deterministic
            if j not in parent:
                parent[j] = k
                queue.append(j)
    if goal not in parent:
        raise ValueError("target aneurysm unreachable from start node")
    path = []
    k = goal
    while k != -1:
        path.append(k)
        k = parent[k]
    path.reverse()
    return vmap.nodes[np.array(path)]
