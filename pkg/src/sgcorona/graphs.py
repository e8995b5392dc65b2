"""Signed graphs: construction, degrees, balance, switching, the
neighbourhood corona product, brute-force isomorphism, and edge-list I/O."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int, int]

SIGN_TOKENS = {"+": 1, "+1": 1, "-": -1, "-1": -1}

DEFAULT_ISO_CAP = 12


class GraphError(ValueError):
    """Invalid signed-graph data or operation."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexIndexError(GraphError):
    pass


class SizeLimitError(GraphError):
    """Brute-force search refused: input exceeds the configured size cap."""


class ParseError(GraphError):
    """Malformed edge-list text; remembers the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _canonical(u: int, v: int, s: int) -> Edge:
    return (u, v, s) if u < v else (v, u, s)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree counts: total, positive, negative and net."""

    degree: tuple[int, ...]
    pos_degree: tuple[int, ...]
    neg_degree: tuple[int, ...]
    net_degree: tuple[int, ...]


@dataclass(frozen=True)
class SignedGraph:
    """An undirected graph whose edges carry a sign in {+1, -1}.

    Vertices are 0..n-1.  Edges are canonical triples (u, v, s) with u < v,
    kept sorted, with at most one edge per vertex pair.  Instances are
    immutable values; every operation returns a new graph.  Use
    :func:`from_edge_list` to build one from raw, unordered triples.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        for u, v, s in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexIndexError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not in canonical u < v order")
            if s not in (1, -1):
                raise GraphError(f"edge sign must be +1 or -1, got {s!r}")
            if (u, v) in seen:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def positive_edge_count(self) -> int:
        return sum(1 for _, _, s in self.edges if s > 0)

    @property
    def negative_edge_count(self) -> int:
        return sum(1 for _, _, s in self.edges if s < 0)

    def sign_map(self) -> dict[tuple[int, int], int]:
        """Edge signs keyed by both orientations of each vertex pair."""
        out: dict[tuple[int, int], int] = {}
        for u, v, s in self.edges:
            out[(u, v)] = s
            out[(v, u)] = s
        return out

    def adjacency_lists(self) -> list[list[tuple[int, int]]]:
        """Per-vertex lists of (neighbour, sign)."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u].append((v, s))
            adj[v].append((u, s))
        return adj

    def degrees(self) -> DegreeProfile:
        pos = [0] * self.n
        neg = [0] * self.n
        for u, v, s in self.edges:
            if s > 0:
                pos[u] += 1
                pos[v] += 1
            else:
                neg[u] += 1
                neg[v] += 1
        deg = tuple(p + m for p, m in zip(pos, neg))
        net = tuple(p - m for p, m in zip(pos, neg))
        return DegreeProfile(deg, tuple(pos), tuple(neg), net)

    def regularity(self) -> int | None:
        """The common degree when every vertex has the same one, else None."""
        if self.n == 0:
            return None
        deg = set(self.degrees().degree)
        return deg.pop() if len(deg) == 1 else None

    def net_regularity(self) -> int | None:
        """The common net degree (d+ minus d-) when constant, else None."""
        if self.n == 0:
            return None
        net = set(self.degrees().net_degree)
        return net.pop() if len(net) == 1 else None

    def is_balanced(self) -> bool:
        """True when every cycle has positive sign product.

        Assigns a +-1 potential along a spanning forest and checks that every
        remaining edge is consistent with the potentials of its endpoints.
        """
        pot = [0] * self.n
        adj = self.adjacency_lists()
        for root in range(self.n):
            if pot[root]:
                continue
            pot[root] = 1
            stack = [root]
            while stack:
                u = stack.pop()
                for v, s in adj[u]:
                    if pot[v] == 0:
                        pot[v] = s * pot[u]
                        stack.append(v)
                    elif pot[v] != s * pot[u]:
                        return False
        return True

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        adj = self.adjacency_lists()
        count = 1
        while stack:
            u = stack.pop()
            for v, _ in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    stack.append(v)
        return count == self.n

    def switch(self, x: Iterable[int]) -> SignedGraph:
        """Negate the sign of every edge with exactly one endpoint in x."""
        xs = set(x)
        for v in xs:
            if not (0 <= v < self.n):
                raise VertexIndexError(f"switch vertex {v} out of range for n={self.n}")
        edges = tuple(
            (u, v, -s if (u in xs) != (v in xs) else s) for u, v, s in self.edges
        )
        return SignedGraph(self.n, edges)

    def relabel(self, perm: Sequence[int]) -> SignedGraph:
        """Apply the vertex relabelling old -> perm[old]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of the vertices")
        edges = tuple(sorted(_canonical(perm[u], perm[v], s) for u, v, s in self.edges))
        return SignedGraph(self.n, edges)


def from_edge_list(n: int, triples: Iterable[tuple[int, int, int]]) -> SignedGraph:
    """Build a graph from raw (u, v, sign) triples, normalising u < v.

    Repeating a pair with the same sign collapses to one edge; repeating it
    with the opposite sign is an error.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    sign: dict[tuple[int, int], int] = {}
    for u, v, s in triples:
        s = int(s)
        if s not in (1, -1):
            raise GraphError(f"edge sign must be +1 or -1, got {s!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexIndexError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in sign:
            if sign[key] != s:
                raise DuplicateEdgeError(f"conflicting signs for edge {key}")
            continue
        sign[key] = s
    return SignedGraph(n, tuple(sorted((u, v, s) for (u, v), s in sign.items())))


def edgeless(n: int) -> SignedGraph:
    return SignedGraph(n)


def path_graph(n: int, sign: int = 1) -> SignedGraph:
    return SignedGraph(n, tuple((i, i + 1, sign) for i in range(n - 1)))


def cycle_graph(n: int, signs: int | Sequence[int] = 1) -> SignedGraph:
    """Cycle 0-1-...-(n-1)-0; signs is one sign for all edges or a length-n
    sequence where signs[i] belongs to edge (i, i+1) and signs[n-1] to the
    closing edge (0, n-1)."""
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    if isinstance(signs, int):
        signs = [signs] * n
    if len(signs) != n:
        raise GraphError(f"need {n} signs, got {len(signs)}")
    edges = [(i, i + 1, signs[i]) for i in range(n - 1)]
    edges.append((0, n - 1, signs[n - 1]))
    return SignedGraph(n, tuple(sorted(edges)))


def alternating_cycle(n: int) -> SignedGraph:
    """Even cycle with alternating edge signs; net degree 0 at every vertex."""
    if n < 4 or n % 2:
        raise GraphError("alternating cycle needs an even length >= 4")
    return cycle_graph(n, [1 if i % 2 == 0 else -1 for i in range(n)])


def complete_graph(n: int, sign: int = 1) -> SignedGraph:
    edges = tuple((u, v, sign) for u in range(n) for v in range(u + 1, n))
    return SignedGraph(n, edges)


def complete_bipartite(p: int, q: int, sign: int = 1) -> SignedGraph:
    """Complete bipartite graph: part {0..p-1} against {p..p+q-1}."""
    if p < 1 or q < 1:
        raise GraphError("both parts must be non-empty")
    edges = tuple((u, v, sign) for u in range(p) for v in range(p, p + q))
    return SignedGraph(p + q, edges)


def star_graph(leaves: int, sign: int = 1) -> SignedGraph:
    return complete_bipartite(1, leaves, sign)


def unbalanced_c4() -> SignedGraph:
    """The 4-cycle with exactly one negative edge."""
    return cycle_graph(4, (1, 1, 1, -1))


def disjoint_union(a: SignedGraph, b: SignedGraph) -> SignedGraph:
    edges = list(a.edges) + [(u + a.n, v + a.n, s) for u, v, s in b.edges]
    return SignedGraph(a.n + b.n, tuple(sorted(edges)))


def neighbourhood_corona(s1: SignedGraph, s2: SignedGraph) -> SignedGraph:
    """Corona of s1 with s2: one copy of s1 and one copy of s2 per s1-vertex,
    where every neighbour w of vertex i is joined to the whole of copy i with
    the sign of the edge (w, i).

    Layout: vertices 0..n1-1 are s1's; copy i occupies the contiguous block
    n1 + i*n2 .. n1 + (i+1)*n2 - 1, in s2's vertex order.  The result has
    n1*(n2+1) vertices and |E1| + n1*|E2| + 2*n2*|E1| edges.
    """
    if s1.n < 1:
        raise GraphError("corona needs a non-empty first factor")
    n1, n2 = s1.n, s2.n

    def cv(i: int, u: int) -> int:
        return n1 + i * n2 + u

    edges = list(s1.edges)
    for i in range(n1):
        edges.extend((cv(i, u), cv(i, v), s) for u, v, s in s2.edges)
    for u, v, s in s1.edges:
        for w in range(n2):
            edges.append((v, cv(u, w), s))
            edges.append((u, cv(v, w), s))
    return SignedGraph(n1 * (n2 + 1), tuple(sorted(edges)))


def _check_iso_cap(s1: SignedGraph, s2: SignedGraph, cap: int) -> None:
    if max(s1.n, s2.n) > cap:
        raise SizeLimitError(
            f"brute-force isomorphism capped at {cap} vertices, got {max(s1.n, s2.n)}"
        )


def _iso_mappings(s1: SignedGraph, s2: SignedGraph, signed: bool) -> Iterator[tuple[int, ...]]:
    """All vertex bijections carrying s1's edges onto s2's (with signs when
    signed=True, underlying adjacency only otherwise)."""
    n = s1.n
    if s2.n != n:
        return
    p1, p2 = s1.degrees(), s2.degrees()
    if signed:
        inv1 = list(zip(p1.pos_degree, p1.neg_degree))
        inv2 = list(zip(p2.pos_degree, p2.neg_degree))
    else:
        inv1 = [(d,) for d in p1.degree]
        inv2 = [(d,) for d in p2.degree]
    if sorted(inv1) != sorted(inv2):
        return
    sig1 = s1.sign_map()
    sig2 = s2.sign_map()
    cand = [[w for w in range(n) if inv2[w] == inv1[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: (len(cand[v]), -p1.degree[v]))
    mapping = [-1] * n
    used = [False] * n

    def consistent(v: int, w: int, upto: int) -> bool:
        for prev in order[:upto]:
            a = sig1.get((v, prev))
            b = sig2.get((w, mapping[prev]))
            if signed:
                if a != b:
                    return False
            elif (a is None) != (b is None):
                return False
        return True

    def extend(idx: int) -> Iterator[tuple[int, ...]]:
        if idx == n:
            yield tuple(mapping)
            return
        v = order[idx]
        for w in cand[v]:
            if used[w] or not consistent(v, w, idx):
                continue
            mapping[v] = w
            used[w] = True
            yield from extend(idx + 1)
            mapping[v] = -1
            used[w] = False

    yield from extend(0)


def is_isomorphic(s1: SignedGraph, s2: SignedGraph, *, cap: int = DEFAULT_ISO_CAP) -> bool:
    """Exact sign-preserving isomorphism test by pruned brute force."""
    if s1.n != s2.n:
        return False
    _check_iso_cap(s1, s2, cap)
    if s1.positive_edge_count != s2.positive_edge_count:
        return False
    if s1.negative_edge_count != s2.negative_edge_count:
        return False
    return next(_iso_mappings(s1, s2, signed=True), None) is not None


def is_switching_isomorphic(s1: SignedGraph, s2: SignedGraph, *, cap: int = DEFAULT_ISO_CAP) -> bool:
    """True when some vertex bijection maps the underlying graphs onto each
    other with every cycle keeping its sign, i.e. the graphs agree up to
    switching.  Checked by testing, for each underlying isomorphism, that the
    edgewise product of the two signings is balanced."""
    if s1.n != s2.n:
        return False
    _check_iso_cap(s1, s2, cap)
    if s1.edge_count != s2.edge_count:
        return False
    if not s1.edges:
        return True
    sig2 = s2.sign_map()
    for mapping in _iso_mappings(s1, s2, signed=False):
        product = SignedGraph(
            s1.n,
            tuple(sorted(
                _canonical(u, v, s * sig2[(mapping[u], mapping[v])])
                for u, v, s in s1.edges
            )),
        )
        if product.is_balanced():
            return True
    return False


def parse_graph(text: str) -> SignedGraph:
    """Parse the signed edge-list format.

    First non-comment line is the vertex count; each following line is
    "u v s" with 0-based indices and s in {+, -, +1, -1}.  Lines starting
    with '#' are comments; blank lines are ignored.
    """
    n: int | None = None
    sign: dict[tuple[int, int], int] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"expected vertex count, got {line!r}", ln) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", ln)
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v s', got {line!r}", ln)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad vertex index in {line!r}", ln) from None
        s = SIGN_TOKENS.get(parts[2])
        if s is None:
            raise ParseError(f"bad sign token {parts[2]!r}", ln)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", ln)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range in {line!r}", ln)
        key = (u, v) if u < v else (v, u)
        if key in sign and sign[key] != s:
            raise ParseError(f"conflicting duplicate edge {key}", ln)
        sign[key] = s
    if n is None:
        raise ParseError("missing vertex count line")
    return SignedGraph(n, tuple(sorted((u, v, s) for (u, v), s in sign.items())))


def format_graph(s: SignedGraph) -> str:
    lines = [str(s.n)]
    lines.extend(f"{u} {v} {'+' if sg > 0 else '-'}" for u, v, sg in s.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> SignedGraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_graph(s: SignedGraph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_graph(s))
