"""Abstract graphs, named families, barycentric subdivision and pair sets."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from typing import Iterable, Sequence

Edge = tuple[int, int]

DELTA = "Delta"
S = "S"
SD = "Sd"
PAIR_KINDS = (DELTA, S, SD)


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is sorted and every edge is stored low-high; build instances
    through :func:`make_graph` so these invariants are checked.
    """

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Indices of the edges at each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_id(self, edge: int | Sequence[int]) -> int:
        """Accept an edge index or a vertex pair and return the index."""
        if isinstance(edge, int):
            if not 0 <= edge < self.m:
                raise GraphError(f"edge index {edge} out of range")
            return edge
        u, v = edge
        key = (min(u, v), max(u, v))
        try:
            return self.edge_index[key]
        except KeyError:
            raise GraphError(f"{key} is not an edge") from None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    seen: set[Edge] = set()
    for e in edges:
        u, v = (int(x) for x in e)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


def graph_from_json(data: dict) -> Graph:
    return make_graph(data["n"], data["edges"])


def load_graph(path) -> Graph:
    with open(path) as fh:
        return graph_from_json(json.load(fh))


def save_graph(graph: Graph, path) -> None:
    with open(path, "w") as fh:
        json.dump(graph.to_json(), fh)
        fh.write("\n")


def _data_graph(name: str) -> Graph:
    text = resources.files("stringob").joinpath(f"data/{name}.json").read_text()
    return graph_from_json(json.loads(text))


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    return make_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return make_graph(rows * cols, edges)


def wheel(k: int) -> Graph:
    """Hub 0 joined to every vertex of the rim cycle 1..k."""
    rim = [(1 + i, 1 + (i + 1) % k) for i in range(k)]
    return make_graph(k + 1, rim + [(0, 1 + i) for i in range(k)])


def subdivide(graph: Graph, k: int) -> Graph:
    """Replace every edge by a path with ``k`` interior vertices.

    Interior vertices of edge ``i`` get ids ``n + i*k .. n + i*k + k - 1``,
    ordered from the low endpoint to the high one.
    """
    if k < 0:
        raise GraphError("k must be non-negative")
    edges = []
    for i, (u, v) in enumerate(graph.edges):
        chain = [u] + [graph.n + i * k + j for j in range(k)] + [v]
        edges.extend(zip(chain, chain[1:]))
    return make_graph(graph.n + graph.m * k, edges)


def c_cbar(n: int) -> Graph:
    """The graph C*C̄_n drawn with its degree-2 subdivision dots as vertices.

    Ids: inner ring ``v_i = i`` carrying the complement of the n-cycle, outer
    ring ``w_i = n+i``, outer-cycle midpoints ``z_i = 2n+i`` (between w_i and
    w_{i+1}), spoke midpoints ``p_i = 3n+i`` (between v_i and w_i).
    """
    if n < 5:
        raise GraphError("c_cbar needs n >= 5")
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2)
             if (j - i) % n not in (1, n - 1)]
    for i in range(n):
        edges += [(n + i, 2 * n + i), (2 * n + i, n + (i + 1) % n),
                  (i, 3 * n + i), (3 * n + i, n + i)]
    return make_graph(4 * n, edges)


def heawood() -> Graph:
    return _data_graph("heawood")


def gp() -> Graph:
    return _data_graph("gp")


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return make_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_planar(n: int, seed: int, keep: float = 0.8) -> Graph:
    """Random planar graph: a stacked triangulation with edges randomly dropped."""
    rng = random.Random(seed)
    if n < 3:
        return path(n)
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2), (0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges.update({(a, v), (b, v), (c, v)})
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    kept = [e for e in sorted(edges) if rng.random() < keep]
    return make_graph(n, kept)


_FAMILIES = {
    "heawood": heawood,
    "gp": gp,
    "c_cbar": c_cbar,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "subdivide": subdivide,
    "path": path,
    "cycle": cycle,
    "grid": grid,
    "wheel": wheel,
    "gnp": gnp,
    "random_planar": random_planar,
}

FAMILIES = tuple(_FAMILIES)


def generate(family: str, *params) -> Graph:
    """Build a named graph, e.g. ``generate("complete_bipartite", 3, 3)``."""
    try:
        builder = _FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {family}: {exc}") from None


# ---------------------------------------------------------------------------
# Barycentric subdivision
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubdivisionMap:
    """G* together with where each of its vertices and edges came from.

    Vertex ``v < n`` of G* is the original vertex v; vertex ``n + i`` is the
    barycentre of edge ``i``. ``vertex_origin[x]`` is ``("v", v)`` or
    ``("e", i)``; ``edge_origin[k]`` is ``(v, i)`` for the G*-edge joining
    v to the barycentre of edge i.
    """

    source: Graph
    star: Graph
    vertex_origin: tuple[tuple[str, int], ...]
    edge_origin: tuple[tuple[int, int], ...]

    def barycentre(self, edge: int) -> int:
        return self.source.n + edge

    def star_edge(self, v: int, edge: int) -> int:
        return self.star.edge_index[(v, self.source.n + edge)]


def barycentric_subdivision(graph: Graph) -> SubdivisionMap:
    n = graph.n
    star = make_graph(n + graph.m, [(v, n + i) for i, e in enumerate(graph.edges) for v in e])
    vertex_origin = tuple([("v", v) for v in range(n)] + [("e", i) for i in range(graph.m)])
    edge_origin = tuple((v, x - n) for v, x in star.edges)
    return SubdivisionMap(graph, star, vertex_origin, edge_origin)


# ---------------------------------------------------------------------------
# Pair sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgePairSet:
    """Canonically indexed unordered pairs ``(i, j)``, ``i < j``, of edges of ``base``.

    For kind ``Sd`` the base is G* and ``subdivision`` links it to the source graph.
    """

    base: Graph
    kind: str
    pairs: tuple[tuple[int, int], ...]
    subdivision: SubdivisionMap | None = field(default=None, compare=False)

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {p: k for k, p in enumerate(self.pairs)}

    def __len__(self) -> int:
        return len(self.pairs)

    def position(self, a: int, b: int) -> int | None:
        return self.index.get((a, b) if a < b else (b, a))

    def __contains__(self, pair) -> bool:
        a, b = pair
        return self.position(a, b) is not None


def _disjoint(e: Edge, f: Edge) -> bool:
    return e[0] not in f and e[1] not in f


def s_condition(graph: Graph, e: Edge, f: Edge) -> bool:
    """No vertex of e equals or is adjacent to a vertex of f."""
    adj = graph.adjacency
    return all(v != w and w not in adj[v] for v in e for w in f)


def sd_condition(sub: SubdivisionMap, x: int, y: int) -> bool:
    v, _ = sub.edge_origin[x]
    w, _ = sub.edge_origin[y]
    return v != w and not sub.source.has_edge(v, w)


def pair_set(graph: Graph, kind: str) -> EdgePairSet:
    """All unordered pairs of the given kind.

    ``Delta``: disjoint edge pairs of ``graph``. ``S``: pairs with no adjacency
    between their endpoints. ``Sd``: pairs ``{v-alpha, w-beta}`` of G* edges with
    ``v != w`` and ``vw`` not an edge of ``graph``; the result's base is G*.
    """
    if kind == DELTA:
        edges = graph.edges
        pairs = [(i, j) for i, j in itertools.combinations(range(graph.m), 2)
                 if _disjoint(edges[i], edges[j])]
        return EdgePairSet(graph, kind, tuple(pairs))
    if kind == S:
        edges = graph.edges
        pairs = [(i, j) for i, j in itertools.combinations(range(graph.m), 2)
                 if s_condition(graph, edges[i], edges[j])]
        return EdgePairSet(graph, kind, tuple(pairs))
    if kind == SD:
        sub = barycentric_subdivision(graph)
        pairs = [(x, y) for x, y in itertools.combinations(range(sub.star.m), 2)
                 if sd_condition(sub, x, y)]
        return EdgePairSet(sub.star, kind, tuple(pairs), sub)
    raise GraphError(f"unknown pair kind {kind!r}")
