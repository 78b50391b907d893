"""Exact vertex enumeration for orthant-recessive integer polyhedra.

The objects here are polyhedra P = conv(V) + R^d_{>=0} with integer vertex
sets V known only through an argmin oracle: given w >= 0 (not all zero) the
oracle returns a vertex minimizing w . x over the true P.  Enumeration is
incremental beneath-beyond: keep the hull of the vertices found so far,
enumerate its facets exactly, and query the oracle along each facet normal
until no facet is violated.  At that point the candidate hull and the true
hull coincide.

Facets are maintained by a double description of the polar cone in dimension
d+1 with arbitrary-precision integer arithmetic, so degeneracy (ties, lower
dimensional faces) costs nothing in correctness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Polytope:
    """Vertex-presented polytope with integer vertices.

    recession=True flags the Minkowski sum with the nonnegative orthant.
    """

    vertices: tuple[tuple[int, ...], ...]
    dimension: int
    recession: bool = False

    def __init__(self, vertices, dimension=None, recession=False):
        vts = sorted({tuple(int(c) for c in v) for v in vertices})
        if not vts:
            raise ValueError("a polytope needs at least one vertex")
        d = dimension if dimension is not None else len(vts[0])
        if any(len(v) != d for v in vts):
            raise ValueError("mixed vertex dimensions")
        object.__setattr__(self, "vertices", tuple(vts))
        object.__setattr__(self, "dimension", d)
        object.__setattr__(self, "recession", bool(recession))

    @property
    def size(self) -> int:
        return len(self.vertices)


class BudgetExceeded(RuntimeError):
    """Enumeration ran out of oracle budget; .partial carries what was found."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


def _gcd_reduce(vec: list[int]) -> tuple[int, ...]:
    g = 0
    for v in vec:
        g = math.gcd(g, v)
    if g > 1:
        return tuple(v // g for v in vec)
    return tuple(vec)


class PolarDD:
    """Double description of {y : h . y >= 0 for all inserted h} in R^D.

    Constraints h are the homogenized generators (1, v) of polytope vertices
    and (0, e_i) of recession rays; the extreme rays of this polar cone are
    the facets (and the trivial far hyperplane) of the polyhedron.
    """

    def __init__(self, dim: int, first_vertex):
        d = dim
        self.D = d + 1
        v0 = tuple(int(c) for c in first_vertex)
        self.constraints: list[tuple[int, ...]] = [(1,) + v0]
        for i in range(d):
            e = [0] * (d + 1)
            e[1 + i] = 1
            self.constraints.append(tuple(e))
        # rays of the simplicial start cone; evals[k] = constraints[k] . ray
        self.rays: list[list] = []  # [vec, evals, mask]
        far = [1] + [0] * d
        self._add_ray(far)
        for i in range(d):
            r = [0] * (d + 1)
            r[0] = -v0[i]
            r[1 + i] = 1
            self._add_ray(r)

    def _add_ray(self, vec):
        vec = list(_gcd_reduce(list(vec)))
        evals = [sum(h[k] * vec[k] for k in range(self.D)) for h in self.constraints]
        mask = 0
        for idx, s in enumerate(evals):
            if s == 0:
                mask |= 1 << idx
        self.rays.append([vec, evals, mask])

    def insert_vertex(self, vertex) -> None:
        self._insert((1,) + tuple(int(c) for c in vertex))

    def _insert(self, h: tuple[int, ...]) -> None:
        idx = len(self.constraints)
        self.constraints.append(h)
        bit = 1 << idx
        pos, zero, neg = [], [], []
        for ray in self.rays:
            s = sum(h[k] * ray[0][k] for k in range(self.D))
            ray[1].append(s)
            if s > 0:
                pos.append(ray)
            elif s < 0:
                neg.append(ray)
            else:
                ray[2] |= bit
                zero.append(ray)
        if not neg:
            return
        keep = pos + zero
        need = self.D - 2
        new_rays = []
        for rp in pos:
            mp, sp = rp[2], rp[1][idx]
            for rn in neg:
                m = mp & rn[2]
                if m.bit_count() < need:
                    continue
                # combinatorial adjacency: no third ray is tight everywhere both are
                adjacent = True
                for ro in self.rays:
                    if ro is not rp and ro is not rn and (m & ~ro[2]) == 0:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                sn = rn[1][idx]
                vec = [sp * b - sn * a for a, b in zip(rp[0], rn[0])]
                evals = [sp * b - sn * a for a, b in zip(rp[1], rn[1])]
                g = 0
                for v in vec:
                    g = math.gcd(g, v)
                if g > 1:
                    vec = [v // g for v in vec]
                    evals = [v // g for v in evals]
                mask = 0
                for j, s in enumerate(evals):
                    if s == 0:
                        mask |= 1 << j
                new_rays.append([vec, evals, mask])
        self.rays = keep + new_rays

    def facets(self) -> list[tuple[tuple[int, ...], int]]:
        """(normal a, offset b) pairs meaning a . x >= b; the far ray is skipped."""
        out = []
        for vec, _evals, _mask in self.rays:
            a = tuple(vec[1:])
            if any(a):
                out.append((a, -vec[0]))
        return out


def enumerate_lower_vertices(oracle, dim: int, initial_weights, max_oracle_calls=None):
    """All vertices of the orthant-recessive hull reachable through `oracle`.

    oracle(weights) -> (vertex tuple[int], payload); weights is a tuple of
    nonnegative Fractions/ints, never all zero.  Returns (vertices, facets)
    where vertices maps vertex -> payload of its first discovery and facets
    is the exact facet list of the completed polyhedron.
    """
    cache: dict[tuple, tuple] = {}
    calls = 0

    def ask(weights):
        nonlocal calls
        key = tuple(Fraction(x) for x in weights)
        if key in cache:
            return cache[key]
        if max_oracle_calls is not None and calls >= max_oracle_calls:
            raise BudgetExceeded(
                f"oracle budget {max_oracle_calls} exhausted", partial=dict(vertices)
            )
        calls += 1
        vertex, payload = oracle(key)
        vertex = tuple(int(c) for c in vertex)
        cache[key] = (vertex, payload)
        return vertex, payload

    vertices: dict[tuple[int, ...], object] = {}
    first_w = tuple(initial_weights[0])
    v0, payload0 = ask(first_w)
    vertices[v0] = payload0
    dd = PolarDD(dim, v0)
    for w in initial_weights[1:]:
        v, payload = ask(tuple(w))
        if v not in vertices:
            vertices[v] = payload
            dd.insert_vertex(v)

    confirmed: set = set()
    while True:
        progress = False
        for normal, offset in dd.facets():
            key = (normal, offset)
            if key in confirmed:
                continue
            v, payload = ask(normal)
            if v not in vertices:
                vertices[v] = payload
                dd.insert_vertex(v)
                progress = True
                break  # facet list changed
            value = sum(a * c for a, c in zip(normal, v))
            if value < offset:
                raise AssertionError("known vertex violates a current facet")
            confirmed.add(key)
            progress = True
        facet_keys = {(a, b) for a, b in dd.facets()}
        if facet_keys <= confirmed:
            return vertices, sorted(facet_keys)
        if not progress:
            raise AssertionError("no progress while facets remain unconfirmed")


def interior_witness(vertex, facets) -> tuple[int, ...]:
    """A strictly positive integer weight in the open normal cone of `vertex`:
    the sum of its incident facet normals."""
    d = len(vertex)
    total = [0] * d
    for a, b in facets:
        if sum(x * c for x, c in zip(a, vertex)) == b:
            for i in range(d):
                total[i] += a[i]
    if not all(t > 0 for t in total):
        raise AssertionError(f"witness for {vertex} not strictly positive: {total}")
    return tuple(total)


def point_in_polyhedron(point, vertices) -> bool:
    """Exact membership of `point` in conv(vertices) + nonnegative orthant."""
    from . import lp

    pt = [Fraction(c) for c in point]
    vts = [list(v) for v in vertices]
    for v in vts:  # cheap domination shortcut
        if all(Fraction(c) <= x for c, x in zip(v, pt)):
            return True
    d = len(pt)
    m = len(vts)
    # lambda >= 0, sum lambda = 1, sum lambda_j v_j <= point
    A = []
    b = []
    for i in range(d):
        A.append([Fraction(vts[j][i]) for j in range(m)])
        b.append(pt[i])
    A.append([Fraction(1)] * m)
    b.append(Fraction(1))
    A.append([Fraction(-1)] * m)
    b.append(Fraction(-1))
    return lp.feasible_point(A, b) is not None
