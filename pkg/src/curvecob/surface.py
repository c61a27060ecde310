"""The one-vertex cell model of a closed genus-g surface.

The surface is a single 4g-gon with boundary word
a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1, all corners identified to one
vertex.  Sides are indexed 0..4g-1 counterclockwise; side k spans the
vertex angles 2*pi*k/4g to 2*pi*(k+1)/4g on the unit circle.  Side k
carries a point at parameter t in (0,1) (linear along the side); the
gluing identifies (s, t) with (pairing(s), 1-t).

All combinatorial data here is exact; the embedding is used only for
metric quantities (angles, areas) downstream.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


def _pairing(genus: int) -> list[int]:
    # side 4j <-> 4j+2 (a_{j+1} and its inverse), 4j+1 <-> 4j+3 (b_{j+1})
    pair = [0] * (4 * genus)
    for j in range(genus):
        pair[4 * j] = 4 * j + 2
        pair[4 * j + 2] = 4 * j
        pair[4 * j + 1] = 4 * j + 3
        pair[4 * j + 3] = 4 * j + 1
    return pair


def _side_labels(genus: int) -> list[tuple[int, int]]:
    """(generator index 1..2g, sign) per side, reading the boundary word.

    Generators are numbered a_i = 2i-1, b_i = 2i.
    """
    labels = []
    for j in range(genus):
        a, b = 2 * j + 1, 2 * j + 2
        labels += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return labels


def _trace_vertex_link(pairing: Sequence[int]) -> list[int]:
    """Cyclic order of the 4g polygon corners around the identified vertex.

    Corner v sits between side v-1 and side v; rotating once around the
    vertex, corner v is followed by corner pairing(v-1).
    """
    n = len(pairing)
    link = [0]
    cur = 0
    while True:
        cur = pairing[(cur - 1) % n]
        if cur == 0:
            break
        link.append(cur)
        if len(link) > n:
            raise RuntimeError("link tracing does not close up")
    return link


def _homology_matrix(genus: int) -> list[list[int]]:
    """M with [curve] = M @ (signed edge-crossing counts).

    The intersection form in the (a1, b1, ..., ag, bg) basis is the
    block-diagonal symplectic J; inverting the pairing relation gives
    M = J.
    """
    n = 2 * genus
    m = [[0] * n for _ in range(n)]
    for j in range(genus):
        m[2 * j][2 * j + 1] = 1
        m[2 * j + 1][2 * j] = -1
    return m


@dataclass(frozen=True)
class SurfaceModel:
    """Immutable combinatorial + geometric model of S_g, g >= 2."""

    genus: int
    total_area: float
    pairing: tuple[int, ...] = field(init=False)
    side_labels: tuple[tuple[int, int], ...] = field(init=False)
    vertex_link: tuple[int, ...] = field(init=False)
    homology_matrix: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError(f"genus must be >= 2, got {self.genus}")
        if not self.total_area > 0:
            raise ValueError("total_area must be positive")
        object.__setattr__(self, "pairing", tuple(_pairing(self.genus)))
        object.__setattr__(self, "side_labels", tuple(_side_labels(self.genus)))
        object.__setattr__(self, "vertex_link", tuple(_trace_vertex_link(self.pairing)))
        object.__setattr__(
            self, "homology_matrix", tuple(tuple(r) for r in _homology_matrix(self.genus))
        )

    # -- combinatorics ------------------------------------------------

    @property
    def num_sides(self) -> int:
        return 4 * self.genus

    @property
    def euler_characteristic(self) -> int:
        # one vertex, 2g edges, one face
        return 2 - 2 * self.genus

    def side_of(self, gen: int, sign: int) -> int:
        return self.side_labels.index((gen, sign))

    # -- embedding (regular 4g-gon inscribed in the unit circle) ------

    def vertex_coords(self, k: int) -> tuple[float, float]:
        ang = 2.0 * math.pi * (k % self.num_sides) / self.num_sides
        return (math.cos(ang), math.sin(ang))

    def side_endpoints(self, s: int) -> tuple[tuple[float, float], tuple[float, float]]:
        return self.vertex_coords(s), self.vertex_coords(s + 1)

    def side_point(self, s: int, t: Fraction | float) -> tuple[float, float]:
        (x0, y0), (x1, y1) = self.side_endpoints(s)
        tf = float(t)
        return (x0 + tf * (x1 - x0), y0 + tf * (y1 - y0))

    @property
    def polygon_area(self) -> float:
        n = self.num_sides
        return 0.5 * n * math.sin(2.0 * math.pi / n)

    @property
    def area_density(self) -> float:
        """Uniform density rescaling the raw polygon area to total_area."""
        return self.total_area / self.polygon_area

    def side_rotation(self, s: int) -> float:
        """Rotation applied to a direction exiting through side s.

        Carries the outward normal of side s to the inward normal of
        pairing(s), consistent with the parameter-reversing gluing.
        Canonical representative in (-pi, pi); paired sides have opposite
        values, and every value is a multiple of pi/(2g).
        """
        n = self.num_sides
        phi_s = 2.0 * math.pi * (s + 0.5) / n
        phi_p = 2.0 * math.pi * (self.pairing[s] + 0.5) / n
        ang = (phi_p + math.pi - phi_s) % (2.0 * math.pi)
        if ang > math.pi:
            ang -= 2.0 * math.pi
        return ang

    # -- serialization -------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"genus": self.genus, "total_area": self.total_area})

    @classmethod
    def from_json(cls, text: str) -> "SurfaceModel":
        data = json.loads(text)
        return cls(genus=int(data["genus"]), total_area=float(data["total_area"]))


def build_surface(genus: int, total_area: float = 1.0) -> SurfaceModel:
    """Construct the one-vertex model of S_g.  Rejects genus < 2."""
    return SurfaceModel(genus=genus, total_area=total_area)
