"""Small simple graphs with bitset adjacency rows.

Vertices are dense integers 0..n-1. Adjacency is stored as one int bitmask
per vertex, which keeps the exact kernels (clique, coloring, matching search)
fast enough for desk-scale exhaustive work. Graphs are immutable and hashable,
so results of the expensive invariants are memoized per graph.

I/O is graph6 only: the bit-packed upper triangle of the adjacency matrix,
column major, six bits per printable character offset by 63.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Iterator

G6_MAX_SHORT = 62
G6_MAX = 258047

# Brute-force isomorphism dedup over adjacency bitmasks is only sane up to here.
EXHAUSTIVE_MAX_N = 6


class GraphFormatError(ValueError):
    """Malformed graph6 text; ``offset`` points at the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus per-vertex neighbor bitsets."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency rows do not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} mentions vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if u > v:
                    yield (v, u)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(
            self.n,
            tuple((full ^ row ^ (1 << v)) for v, row in enumerate(self.adj)),
        )

    def induced(self, keep) -> "Graph":
        """Induced subgraph on ``keep``, relabeled to 0..k-1 in sorted order."""
        old = sorted(set(keep))
        pos = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            row = 0
            for u in bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(old), tuple(rows))

    def without(self, drop) -> "Graph":
        dropped = set(drop)
        return self.induced(v for v in range(self.n) if v not in dropped)


# ---------------------------------------------------------------------------
# Edge-bit layout shared by graph6 and the bitmask enumeration.
# Bit t of a graph mask is the pair _pair_order(n)[t]: columns j = 1..n-1,
# rows i = 0..j-1, exactly the graph6 packing order.
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _pair_order(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for t, (i, j) in enumerate(_pair_order(g.n)):
        if g.has_edge(i, j):
            mask |= 1 << t
    return mask


def graph_from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    for t in bits(mask):
        i, j = _pair_order(n)[t]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.

    Accepts the optional ``>>graph6<<`` header. Reported offsets are byte
    positions in the input line, header included.
    """
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(">>graph6<<"):
        base = 10
        line = line[10:]
    if not line:
        raise GraphFormatError("empty graph6 string", base)
    vals = []
    for i, ch in enumerate(line):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise GraphFormatError(
                f"character {ch!r} outside printable range 63..126", base + i
            )
        vals.append(code - 63)

    if vals[0] <= 62:
        n = vals[0]
        body_at = 1
    elif len(vals) >= 2 and vals[1] == 63:
        # 8-byte form; supported only up to the same cap as emit.
        if len(vals) < 8:
            raise GraphFormatError("truncated extended length header", base + len(line))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body_at = 8
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated long length header", base + len(line))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body_at = 4
    if n > G6_MAX:
        raise GraphFormatError(f"vertex count {n} exceeds supported range", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - body_at
    if have < need:
        raise GraphFormatError(
            f"truncated body: expected {need} data bytes, got {have}",
            base + len(line),
        )
    if have > need:
        raise GraphFormatError("unexpected trailing data", base + body_at + need)

    rows = [0] * n
    pairs = _pair_order(n)
    for t in range(nbits):
        if vals[body_at + t // 6] >> (5 - t % 6) & 1:
            i, j = pairs[t]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    pad = need * 6 - nbits
    if pad and vals[body_at + need - 1] & ((1 << pad) - 1):
        raise GraphFormatError(
            "nonzero padding bits in final byte", base + body_at + need - 1
        )
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 under its given vertex order (no canonicalization)."""
    n = g.n
    if n > G6_MAX:
        raise ValueError(f"size {n} exceeds supported encoding range (max {G6_MAX})")
    if n <= G6_MAX_SHORT:
        head = chr(n + 63)
    else:
        head = chr(126) + chr((n >> 12) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    out = [head]
    acc = 0
    filled = 0
    for i, j in _pair_order(n):
        acc = acc << 1 | (g.adj[i] >> j & 1)
        filled += 1
        if filled == 6:
            out.append(chr(acc + 63))
            acc = 0
            filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("negative size")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("negative size")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    if n < 0:
        raise ValueError("negative size")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 0:
        raise ValueError("negative size")
    if n == 0:
        return empty(0)
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, 5 + i))
    return Graph.from_edges(10, edges)


def er_random(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi G(n, p).

    Deterministic: one Mersenne Twister draw per vertex pair, pairs visited
    in graph6 bit order (columns j = 1..n-1, rows i < j).
    """
    if n < 0:
        raise ValueError("negative size")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if seed is None:
        raise ValueError("er_random requires an explicit seed")
    rng = random.Random(seed)
    rows = [0] * n
    for i, j in _pair_order(n):
        if rng.random() < p:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def generate(family: str, *, n: int | None = None, p: float | None = None,
             seed: int | None = None) -> Graph:
    """Dispatch on family name; used by the CLI's ``--gen`` specs."""
    if family == "complete":
        return complete(_need(n, "n"))
    if family == "cycle":
        return cycle(_need(n, "n"))
    if family == "path":
        return path(_need(n, "n"))
    if family == "empty":
        return empty(_need(n, "n"))
    if family == "petersen":
        return petersen()
    if family == "er_random":
        if seed is None:
            raise ValueError("er_random requires an explicit seed")
        return er_random(_need(n, "n"), _need(p, "p"), seed)
    raise ValueError(f"unknown graph family {family!r}")


def _need(value, name):
    if value is None:
        raise ValueError(f"missing parameter {name}")
    return value


# ---------------------------------------------------------------------------
# Exact invariants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphInvariants:
    """Exact structural numbers: clique, independence, degrees, matching."""

    omega: int
    alpha: int
    max_deg: int
    min_deg: int
    nu: int


@functools.lru_cache(maxsize=65536)
def max_clique_mask(g: Graph) -> int:
    """A maximum clique of ``g`` as a vertex bitmask (deterministic witness).

    Branch and bound over candidate bitsets with a popcount bound.
    """
    adj = g.adj
    best_mask = 0
    best = 0

    def extend(clique: int, size: int, cand: int):
        nonlocal best, best_mask
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if size + 1 > best:
                best = size + 1
                best_mask = clique | low
            rest = cand & adj[v]
            if rest and size + 1 + rest.bit_count() > best:
                extend(clique | low, size + 1, rest)

    extend(0, 0, (1 << g.n) - 1)
    return best_mask


def clique_number(g: Graph) -> int:
    return max_clique_mask(g).bit_count()


def max_independent_set_mask(g: Graph) -> int:
    return max_clique_mask(g.complement())


def independence_number(g: Graph) -> int:
    return max_independent_set_mask(g).bit_count()


@functools.lru_cache(maxsize=65536)
def matching_number(g: Graph) -> int:
    """Exact maximum matching size by memoized branching on the lowest vertex."""
    adj = g.adj
    memo: dict[int, int] = {}

    def rec(avail: int) -> int:
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            if adj[v] & avail:
                break
            avail ^= low  # isolated within avail: removing it is forced
        else:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail ^ low
        best = rec(rest)  # v stays unmatched
        for u in bits(adj[v] & rest):
            got = 1 + rec(rest ^ (1 << u))
            if got > best:
                best = got
        memo[avail] = best
        return best

    return rec((1 << g.n) - 1)


def invariants(g: Graph) -> GraphInvariants:
    """All five invariants, exact. The n = 0 graph gets all zeros by convention."""
    if g.n == 0:
        return GraphInvariants(0, 0, 0, 0, 0)
    degrees = [row.bit_count() for row in g.adj]
    return GraphInvariants(
        omega=clique_number(g),
        alpha=clique_number(g.complement()),
        max_deg=max(degrees),
        min_deg=min(degrees),
        nu=matching_number(g),
    )


# ---------------------------------------------------------------------------
# Exhaustive enumeration up to isomorphism
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _perm_bit_tables(n: int) -> tuple[tuple[int, ...], ...]:
    pairs = _pair_order(n)
    index = {pair: t for t, pair in enumerate(pairs)}
    tables = []
    for perm in itertools.permutations(range(n)):
        table = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            table.append(index[(a, b) if a < b else (b, a)])
        tables.append(tuple(table))
    return tuple(tables)


def _permuted_mask(mask: int, table: tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << table[low.bit_length() - 1]
        mask ^= low
    return out


def canonical_mask(n: int, mask: int) -> int:
    """Minimum adjacency bitmask over all vertex permutations."""
    best = mask
    for table in _perm_bit_tables(n)[1:]:
        pm = _permuted_mask(mask, table)
        if pm < best:
            best = pm
    return best


@functools.lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All isomorphism classes on exactly ``n`` vertices, canonical reps in mask order.

    Iterates every adjacency bitmask and keeps those that are minimal in their
    permutation orbit; practical only up to EXHAUSTIVE_MAX_N.
    """
    if n < 0:
        raise ValueError("negative size")
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError(
            f"exhaustive enumeration supports n <= {EXHAUSTIVE_MAX_N} (asked for {n})"
        )
    tables = _perm_bit_tables(n)[1:]
    reps = []
    for mask in range(1 << (n * (n - 1) // 2)):
        for table in tables:
            if _permuted_mask(mask, table) < mask:
                break
        else:
            reps.append(graph_from_mask(n, mask))
    return tuple(reps)
