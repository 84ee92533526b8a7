"""Layered planar networks whose path polynomials reproduce the matrices.

Vertices live on a grid: ``P`` vertices at even columns (one column per
level), ``Q`` vertices between them, and barred kinds (``Pbar``/``Qbar``)
for mirrored copies.  A one-level layer network carries the transfer
matrix L_n as its path generating functions; gluing the layers (with
identity padding rows) yields a network for the full triangular matrix,
and two further constructions yield networks for the Hankel matrix.

The generating function GF(u, v) is the sum over all directed u -> v paths
of the product of arc weights, with GF(u, u) = 1.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CapExceeded,
    MissingWitness,
    NegativeWeight,
    RequiresUnitGamma,
    ShapeError,
)
from .families import FamilySpec
from .qpoly import ONE, QPoly, ZERO

WEIGHT_CASES = (1, 2, 3, 4, 5)

_KIND_ORDER = {"P": 0, "Q": 1, "Pbar": 2, "Qbar": 3}
_MIRROR_KIND = {"P": "Pbar", "Q": "Qbar", "Pbar": "P", "Qbar": "Q"}
_DOT_KIND = {"P": "P", "Q": "Q", "Pbar": "Pb", "Qbar": "Qb"}


class Vertex(NamedTuple):
    kind: str
    level: int
    height: int


class Arc(NamedTuple):
    tail: Vertex
    head: Vertex
    weight: QPoly


def P(level: int, height: int) -> Vertex:
    return Vertex("P", level, height)


def Q(level: int, height: int) -> Vertex:
    return Vertex("Q", level, height)


def mirror_vertex(v: Vertex) -> Vertex:
    return Vertex(_MIRROR_KIND[v.kind], v.level, v.height)


def _vkey(v: Vertex) -> tuple[int, int, int]:
    return (v.level, _KIND_ORDER[v.kind], v.height)


class PlanarNetwork:
    """An acyclic weighted digraph with ordered source and sink sequences.

    Zero-weight arcs are stored like any other arc; acyclicity is verified
    by topological sort at construction and the sorted order is cached for
    the generating-function sweeps.
    """

    def __init__(
        self,
        arcs: Iterable[Arc | tuple],
        sources: Sequence[Vertex],
        sinks: Sequence[Vertex],
        extra_vertices: Iterable[Vertex] = (),
    ) -> None:
        self.arcs: tuple[Arc, ...] = tuple(Arc(*a) for a in arcs)
        seen_pairs: set[tuple[Vertex, Vertex]] = set()
        for arc in self.arcs:
            if not isinstance(arc.weight, QPoly):
                raise TypeError(f"arc weight {arc.weight!r} is not a QPoly")
            pair = (arc.tail, arc.head)
            if pair in seen_pairs:
                raise ValueError(f"duplicate arc {arc.tail} -> {arc.head}")
            seen_pairs.add(pair)
        self.sources: tuple[Vertex, ...] = tuple(sources)
        self.sinks: tuple[Vertex, ...] = tuple(sinks)
        verts: set[Vertex] = set(extra_vertices)
        verts.update(self.sources)
        verts.update(self.sinks)
        for arc in self.arcs:
            verts.add(arc.tail)
            verts.add(arc.head)
        self.vertices: frozenset[Vertex] = frozenset(verts)

        adj: dict[Vertex, list[tuple[Vertex, QPoly]]] = {v: [] for v in verts}
        indegree: dict[Vertex, int] = {v: 0 for v in verts}
        for arc in self.arcs:
            adj[arc.tail].append((arc.head, arc.weight))
            indegree[arc.head] += 1
        for heads in adj.values():
            heads.sort(key=lambda hw: _vkey(hw[0]))
        self._adj = adj

        ready = [v for v in verts if indegree[v] == 0]
        heapify(ready)
        topo: list[Vertex] = []
        while ready:
            v = heappop(ready)
            topo.append(v)
            for head, _ in adj[v]:
                indegree[head] -= 1
                if indegree[head] == 0:
                    heappush(ready, head)
        if len(topo) != len(verts):
            raise ValueError("digraph contains a directed cycle")
        self._topo = tuple(topo)
        self._order = {v: i for i, v in enumerate(topo)}

    # -- path generating functions ------------------------------------

    def _require_vertex(self, v: Vertex) -> None:
        if v not in self.vertices:
            raise ValueError(f"{v} is not a vertex of this network")

    def _forward_gf(self, u: Vertex) -> dict[Vertex, QPoly]:
        acc: dict[Vertex, QPoly] = {u: ONE}
        for v in self._topo[self._order[u]:]:
            value = acc.get(v)
            if value is None or value.is_zero():
                continue
            for head, weight in self._adj[v]:
                acc[head] = acc.get(head, ZERO) + value * weight
        return acc

    def path_gf(self, u: Vertex, v: Vertex) -> QPoly:
        """Sum of weight products over all directed u -> v paths."""
        self._require_vertex(u)
        self._require_vertex(v)
        return self._forward_gf(u).get(v, ZERO)

    def gf_matrix(self) -> list[list[QPoly]]:
        """GF(source_i, sink_j) over the ordered boundary sequences."""
        rows = []
        for u in self.sources:
            acc = self._forward_gf(u)
            rows.append([acc.get(v, ZERO) for v in self.sinks])
        return rows

    def count_paths(self, u: Vertex, v: Vertex) -> int:
        """Number of directed u -> v paths (1 when u = v)."""
        self._require_vertex(u)
        self._require_vertex(v)
        counts: dict[Vertex, int] = {u: 1}
        for w in self._topo[self._order[u]:]:
            value = counts.get(w)
            if not value:
                continue
            for head, _ in self._adj[w]:
                counts[head] = counts.get(head, 0) + value
        return counts.get(v, 0)

    def enumerate_paths(
        self, u: Vertex, v: Vertex, cap: int = 100000
    ) -> list[tuple[tuple[Vertex, ...], QPoly]]:
        """All directed u -> v paths as (vertex tuple, weight product) pairs.

        Refuses to enumerate more than ``cap`` paths.  The single-vertex
        path is returned for u = v, with weight 1.
        """
        total = self.count_paths(u, v)
        if total > cap:
            raise CapExceeded(f"{total} paths from {u} to {v} exceed cap {cap}")
        toward: set[Vertex] = {v}
        stack = [v]
        radj: dict[Vertex, list[Vertex]] = {}
        for arc in self.arcs:
            radj.setdefault(arc.head, []).append(arc.tail)
        while stack:
            w = stack.pop()
            for tail in radj.get(w, ()):
                if tail not in toward:
                    toward.add(tail)
                    stack.append(tail)

        results: list[tuple[tuple[Vertex, ...], QPoly]] = []
        path: list[Vertex] = [u]

        def walk(w: Vertex, weight: QPoly) -> None:
            if w == v:
                results.append((tuple(path), weight))
                return
            for head, arc_weight in self._adj[w]:
                if head not in toward:
                    continue
                path.append(head)
                walk(head, weight * arc_weight)
                path.pop()

        if u in toward:
            walk(u, ONE)
        return results

    def to_json_dict(self) -> dict:
        def vjson(v: Vertex) -> dict:
            return {"kind": v.kind, "level": v.level, "height": v.height}

        return {
            "vertices": [vjson(v) for v in sorted(self.vertices, key=_vkey)],
            "arcs": [
                {
                    "tail": vjson(a.tail),
                    "head": vjson(a.head),
                    "weight": a.weight.to_json(),
                }
                for a in sorted(self.arcs, key=lambda a: (_vkey(a.tail), _vkey(a.head)))
            ],
            "sources": [vjson(v) for v in self.sources],
            "sinks": [vjson(v) for v in self.sinks],
        }


# -- boundary conventions --------------------------------------------
# Matrix row i always corresponds to the i-th entry of the ordered source
# sequence, and column j to the j-th sink; these helpers are the single
# place that fixes which vertex that is.


def layer_sources(n: int) -> tuple[Vertex, ...]:
    """Sources of the level-n layer: P(n, n+1) down to P(n, 0)."""
    return tuple(P(n, h) for h in range(n + 1, -1, -1))


def layer_sinks(n: int) -> tuple[Vertex, ...]:
    """Sinks of the level-n layer: P(n+1, n+1) down to P(n+1, 0)."""
    return tuple(P(n + 1, h) for h in range(n + 1, -1, -1))


def cs_sources(n: int) -> tuple[Vertex, ...]:
    """Row i of the n-th triangular matrix reads from P(0, n-i)."""
    return tuple(P(0, h) for h in range(n, -1, -1))


def cs_sinks(n: int) -> tuple[Vertex, ...]:
    """Column j of the n-th triangular matrix reads into P(n, n-j)."""
    return tuple(P(n, h) for h in range(n, -1, -1))


def hankel_sources(n: int, k: int) -> tuple[Vertex, ...]:
    """Row i of the Hankel matrix reads from the diagonal vertex P(m, m), m = n+k-i."""
    return tuple(P(n + k - i, n + k - i) for i in range(n + 1))


def hankel_sinks(n: int, k: int) -> tuple[Vertex, ...]:
    """Column j of the Hankel matrix reads into P(m, m), m = n+k+j."""
    return tuple(P(n + k + j, n + k + j) for j in range(n + 1))


def factored_sinks(n: int) -> tuple[Vertex, ...]:
    """Column j of the factored Hankel matrix reads into Pbar(0, n-j)."""
    return tuple(Vertex("Pbar", 0, h) for h in range(n, -1, -1))


# -- layer construction ----------------------------------------------


def build_layer(f: FamilySpec, n: int, case: int) -> PlanarNetwork:
    """The one-level network between levels n and n+1 under a weight case.

    Every case distributes r/s/t (or the witnesses b/c, for case 5) over
    the horizontal, diagonal, and super-diagonal arcs so that the path
    generating functions equal the transfer matrix L_n.  All remaining
    arcs carry weight 1.  Computed weights must be q-nonnegative; a family
    violating the matching condition raises NegativeWeight.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n!r}")
    if case not in WEIGHT_CASES:
        raise ValueError(f"weight case must be one of {WEIGHT_CASES}, got {case!r}")
    if case == 5 and not f.has_witnesses:
        raise MissingWitness(
            f"family {f.name!r} carries no witness sequences for weight case 5"
        )

    arcs: list[Arc] = []

    def add(tail: Vertex, head: Vertex, weight: QPoly) -> None:
        if not weight.is_q_nonnegative():
            raise NegativeWeight(
                f"arc {tail} -> {head} would get weight {weight} "
                f"(family {f.name!r}, case {case})"
            )
        arcs.append(Arc(tail, head, weight))

    for k in range(n + 2):  # horizontal arcs at height k
        j = n - k
        if case == 1:
            first = f.r(j) if k <= n else ONE
            second = ONE
        elif case in (2, 3):
            first = ONE
            second = f.r(j) if k <= n else ONE
        elif case == 4:
            first = f.r(j) if k <= n else ONE
            second = ONE
        else:
            first = second = ONE
        add(P(n, k), Q(n, k), first)
        add(Q(n, k), P(n + 1, k), second)

    for k in range(n + 1):  # diagonal arcs from height k to k+1
        j = n - k
        if case == 1:
            first = f.t(j)
            second = ONE
        elif case == 2:
            first = ZERO if k == n else ONE
            second = f.t(j + 1)
        elif case == 3:
            first = f.t(j)
            second = ONE
        elif case == 4:
            first = ZERO if k == n else ONE
            second = f.t(j + 1)
        else:
            first = f.b(j)
            second = f.c(j)
        add(P(n, k), Q(n, k + 1), first)
        add(Q(n, k), P(n + 1, k + 1), second)

    for k in range(n + 1):  # super-diagonal arcs from height k to k+1
        j = n - k
        if case == 1:
            weight = f.s(j) - f.r(j) - f.t(j)
        elif case == 2:
            weight = f.s(j) - f.r(j - 1) - f.t(j + 1)
        elif case == 3:
            weight = f.s(j) - f.r(j - 1) * f.t(j) - ONE
        elif case == 4:
            if k == n:
                weight = f.s(0) - f.r(0) * f.t(1)
            else:
                weight = f.s(j) - f.r(j) * f.t(j + 1) - ONE
        else:
            weight = ZERO
        add(P(n, k), P(n + 1, k + 1), weight)

    return PlanarNetwork(arcs, layer_sources(n), layer_sinks(n))


# -- composition -----------------------------------------------------


def glue(x: PlanarNetwork, y: PlanarNetwork) -> PlanarNetwork:
    """Identify sink i of x with source i of y; GFs compose like products.

    Requires equal boundary lengths, the sinks of x to be sinks of its
    digraph, and the sources of y to be sources of its digraph.  Apart
    from the identified boundary the vertex sets must be disjoint.
    """
    if len(x.sinks) != len(y.sources):
        raise ShapeError(
            f"cannot glue: {len(x.sinks)} sinks against {len(y.sources)} sources"
        )
    if len(set(x.sinks)) != len(x.sinks) or len(set(y.sources)) != len(y.sources):
        raise ShapeError("cannot glue: boundary sequences contain duplicates")
    has_out = {a.tail for a in x.arcs}
    for v in x.sinks:
        if v in has_out:
            raise ShapeError(f"sink {v} of the left network has outgoing arcs")
    has_in = {a.head for a in y.arcs}
    for v in y.sources:
        if v in has_in:
            raise ShapeError(f"source {v} of the right network has incoming arcs")
    mapping = dict(zip(y.sources, x.sinks))
    boundary = set(y.sources)
    for v in y.vertices:
        if v not in boundary and v in x.vertices:
            raise ShapeError(f"vertex {v} appears on both sides away from the boundary")

    def ren(v: Vertex) -> Vertex:
        return mapping.get(v, v)

    arcs = x.arcs + tuple(Arc(ren(a.tail), ren(a.head), a.weight) for a in y.arcs)
    vertices = set(x.vertices) | {ren(v) for v in y.vertices}
    return PlanarNetwork(
        arcs,
        x.sources,
        tuple(ren(v) for v in y.sinks),
        extra_vertices=vertices,
    )


def mirror(net: PlanarNetwork) -> PlanarNetwork:
    """Reverse every arc and bar every vertex; sources and sinks swap."""
    arcs = tuple(
        Arc(mirror_vertex(a.head), mirror_vertex(a.tail), a.weight) for a in net.arcs
    )
    return PlanarNetwork(
        arcs,
        tuple(mirror_vertex(v) for v in net.sinks),
        tuple(mirror_vertex(v) for v in net.sources),
        extra_vertices={mirror_vertex(v) for v in net.vertices},
    )


def _bar_extend(net: PlanarNetwork, n: int) -> PlanarNetwork:
    """Add the identity padding row at height n+1 across levels 0..n."""
    arcs = net.arcs + tuple(
        Arc(P(l, n + 1), P(l + 1, n + 1), ONE) for l in range(n)
    )
    return PlanarNetwork(
        arcs,
        (P(0, n + 1),) + net.sources,
        (P(n, n + 1),) + net.sinks,
        extra_vertices=net.vertices,
    )


def _point_network(v: Vertex) -> PlanarNetwork:
    return PlanarNetwork((), (v,), (v,))


def build_cs_network(
    f: FamilySpec, n: int, cases: Sequence[int]
) -> PlanarNetwork:
    """Glued layer networks whose GF matrix is the n-th triangular matrix.

    ``cases`` picks the weight case per layer (length n), so mixed-case
    networks are allowed whenever the family satisfies each layer's
    condition.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n!r}")
    cases = tuple(cases)
    if len(cases) != n:
        raise ShapeError(f"need exactly {n} weight cases, got {len(cases)}")
    net = build_layer(f, 0, cases[0])
    for i in range(1, n):
        net = glue(_bar_extend(net, i), build_layer(f, i, cases[i]))
    return net


def _cs_or_point(f: FamilySpec, n: int, cases: Sequence[int]) -> PlanarNetwork:
    if n == 0:
        return _point_network(P(0, 0))
    return build_cs_network(f, n, cases)


def build_hankel_network(
    f: FamilySpec, n: int, k: int, cases: Sequence[int]
) -> PlanarNetwork:
    """Subnetwork of the (2n+k)-level network carrying the Hankel matrix.

    Keeps exactly the arcs lying on directed paths from P(k, k) to
    P(2n+k, 2n+k); sources and sinks run along the main diagonal.  The GF
    matrix is independent of the shift k.
    """
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be >= 0, got n={n!r}, k={k!r}")
    total = 2 * n + k
    cases = tuple(cases)
    if total > 0 and len(cases) != total:
        raise ShapeError(f"need exactly {total} weight cases, got {len(cases)}")
    sources = hankel_sources(n, k)
    sinks = hankel_sinks(n, k)
    if total == 0:
        return PlanarNetwork((), sources, sinks)
    cs = build_cs_network(f, total, cases)
    start, end = P(k, k), P(total, total)

    adj: dict[Vertex, list[Vertex]] = {}
    radj: dict[Vertex, list[Vertex]] = {}
    for arc in cs.arcs:
        adj.setdefault(arc.tail, []).append(arc.head)
        radj.setdefault(arc.head, []).append(arc.tail)

    def sweep(origin: Vertex, neighbours: dict[Vertex, list[Vertex]]) -> set[Vertex]:
        seen = {origin}
        stack = [origin]
        while stack:
            v = stack.pop()
            for w in neighbours.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    forward = sweep(start, adj)
    backward = sweep(end, radj)
    arcs = tuple(a for a in cs.arcs if a.tail in forward and a.head in backward)
    return PlanarNetwork(arcs, sources, sinks)


def _t_network(f: FamilySpec, n: int) -> PlanarNetwork:
    """Diagonal bridge P(n, i) -> Pbar(n, i) weighted t_1 ... t_{n-i}."""
    arcs = []
    for i in range(n + 1):
        weight = ONE
        for m in range(1, n - i + 1):
            weight = weight * f.t(m)
        arcs.append(Arc(P(n, i), Vertex("Pbar", n, i), weight))
    sources = tuple(P(n, h) for h in range(n, -1, -1))
    sinks = tuple(Vertex("Pbar", n, h) for h in range(n, -1, -1))
    return PlanarNetwork(arcs, sources, sinks)


def build_hankel_factored(
    f: FamilySpec, n: int, cases: Sequence[int]
) -> PlanarNetwork:
    """Network for the Hankel matrix glued from C, a diagonal bridge, and
    the mirror of C; requires r_k = 1 for all k <= n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n!r}")
    for k in range(n + 1):
        if f.r(k) != ONE:
            raise RequiresUnitGamma(
                f"family {f.name!r} has r_{k} = {f.r(k)}; the factored "
                "construction needs r_k = 1"
            )
    cs = _cs_or_point(f, n, cases)
    return glue(glue(cs, _t_network(f, n)), mirror(cs))


# -- module-level conveniences ---------------------------------------


def path_gf(net: PlanarNetwork, u: Vertex, v: Vertex) -> QPoly:
    return net.path_gf(u, v)


def count_paths(net: PlanarNetwork, u: Vertex, v: Vertex) -> int:
    return net.count_paths(u, v)


def enumerate_paths(
    net: PlanarNetwork, u: Vertex, v: Vertex, cap: int = 100000
) -> list[tuple[tuple[Vertex, ...], QPoly]]:
    return net.enumerate_paths(u, v, cap)


def gf_matrix(net: PlanarNetwork) -> list[list[QPoly]]:
    return net.gf_matrix()


# -- DOT export ------------------------------------------------------


def _positions(net: PlanarNetwork) -> dict[Vertex, tuple[int, int]]:
    if not net.vertices:
        return {}
    max_level = max(v.level for v in net.vertices)
    pos: dict[Vertex, tuple[int, int]] = {}
    for v in net.vertices:
        if v.kind == "P":
            x = 2 * v.level
        elif v.kind == "Q":
            x = 2 * v.level + 1
        elif v.kind == "Pbar":
            x = 4 * max_level + 1 - 2 * v.level
        else:  # Qbar
            x = 4 * max_level - 2 * v.level
        pos[v] = (x, v.height)
    return pos


def _dot_name(v: Vertex) -> str:
    return f"{_DOT_KIND[v.kind]}_{v.height}_{v.level}"


def export_dot(net: PlanarNetwork) -> str:
    """Deterministic Graphviz text with pinned grid positions."""
    pos = _positions(net)
    lines = ["digraph {"]
    for v in sorted(net.vertices, key=lambda v: (pos[v], _dot_name(v))):
        x, y = pos[v]
        lines.append(f'  {_dot_name(v)} [pos="{x},{y}!"];')
    for arc in sorted(net.arcs, key=lambda a: (pos[a.tail], pos[a.head])):
        lines.append(
            f'  {_dot_name(arc.tail)} -> {_dot_name(arc.head)} [label="{arc.weight}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
