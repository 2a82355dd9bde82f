"""Exact chromatic computations.

Colorings are unlabeled partitions of the vertex set into nonempty
independent classes, held in a canonical order so enumeration streams are
deterministic and deduplication is free. Everything here is exact: chromatic
numbers come from a DSATUR-ordered branch and bound, and the stinginess
quantities are maximized by a second branch and bound over partitions with an
admissible score bound. Enumeration-based routes exist alongside the direct
searches so the two can cross-check each other.

Guards: full-partition enumeration refuses beyond ``Guards.full`` vertices and
the optimal-coloring machinery beyond ``Guards.optimal``. Exceeding a guard is
an error, never a silent approximation.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .graphs import Graph, bits, clique_number


class PartitionError(ValueError):
    """The class structure does not partition the vertex set."""


class GuardExceededError(RuntimeError):
    """An enumeration guard would be exceeded; refused rather than approximated."""


class PropertyUnsatisfiableError(RuntimeError):
    """No proper coloring of the graph satisfies the property."""


@dataclass(frozen=True)
class Guards:
    """Enumeration limits: ``optimal`` for optimal-coloring work, ``full`` for
    enumerating every proper coloring."""

    optimal: int = 10
    full: int = 8


DEFAULT_GUARDS = Guards()


@dataclass(frozen=True)
class Coloring:
    """Partition into independent classes; classes sorted by (size, least vertex)."""

    classes: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(classes) -> "Coloring":
        canon = []
        seen: set[int] = set()
        for cls in classes:
            cl = tuple(sorted(set(cls)))
            if not cl:
                raise ValueError("empty color class")
            if seen.intersection(cl):
                raise ValueError("color classes overlap")
            seen.update(cl)
            canon.append(cl)
        canon.sort(key=lambda c: (len(c), c[0]))
        return Coloring(tuple(canon))

    def __len__(self) -> int:
        return len(self.classes)

    def vertices(self) -> set[int]:
        return {v for cls in self.classes for v in cls}

    def class_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in cls) for cls in self.classes)

    def class_index_of(self) -> dict[int, int]:
        return {v: j for j, cls in enumerate(self.classes) for v in cls}

    def frame(self) -> tuple[int, ...]:
        """Nondecreasing sequence of class sizes; () for the empty coloring."""
        return tuple(len(cls) for cls in self.classes)

    def frame_m(self, m: int) -> tuple[int, ...]:
        """Suffix of the frame from the first entry of size at least ``m``."""
        if m < 1:
            raise ValueError("m must be positive")
        return tuple(s for s in self.frame() if s >= m)

    def small(self) -> int:
        """Number of vertices lying in classes of size 1 or 2."""
        return sum(len(cls) for cls in self.classes if len(cls) <= 2)

    def singleton_vertices(self) -> tuple[int, ...]:
        return tuple(cls[0] for cls in self.classes if len(cls) == 1)

    def as_lists(self) -> list[list[int]]:
        return [list(cls) for cls in self.classes]


def _check_partition(g: Graph, c: Coloring) -> None:
    want = set(range(g.n))
    got = c.vertices()
    if got != want:
        missing = sorted(want - got)
        extra = sorted(got - want)
        raise PartitionError(
            f"classes do not partition the vertex set (missing {missing}, extra {extra})"
        )


def is_proper(g: Graph, c: Coloring) -> bool:
    """True iff every class is independent. Raises PartitionError if ``c``
    does not partition g's vertices; that is structural, not 'improper'."""
    _check_partition(g, c)
    for mask in c.class_masks():
        for v in bits(mask):
            if g.adj[v] & mask:
                return False
    return True


# ---------------------------------------------------------------------------
# Branch and bound for chi / chi_r
# ---------------------------------------------------------------------------


def _greedy_dsatur(adj: tuple[int, ...], n: int, cap: int | None) -> list[int]:
    """Greedy DSATUR coloring (class masks); respects a class-size cap."""
    classes: list[int] = []
    sizes: list[int] = []
    colored = 0
    saturation = [0] * n  # bitmask of classes adjacent to v
    uncolored = set(range(n))
    while uncolored:
        v = max(
            uncolored,
            key=lambda u: (saturation[u].bit_count(), adj[u].bit_count(), -u),
        )
        uncolored.remove(v)
        for j, mask in enumerate(classes):
            if not (mask & adj[v]) and (cap is None or sizes[j] < cap):
                classes[j] |= 1 << v
                sizes[j] += 1
                break
        else:
            j = len(classes)
            classes.append(1 << v)
            sizes.append(1)
        for u in bits(adj[v]):
            saturation[u] |= 1 << j
        colored += 1
    return classes


def _color_bb(adj: tuple[int, ...], n: int, cap: int | None) -> tuple[int, list[int]]:
    """Exact minimum class count (size cap optional) with one witness."""
    if n == 0:
        return 0, []
    lower = clique_number(Graph(n, adj))
    if cap is not None:
        lower = max(lower, -(-n // cap))
    best_masks = _greedy_dsatur(adj, n, cap)
    best_k = len(best_masks)
    if best_k == lower:
        return best_k, best_masks

    classes: list[int] = []
    sizes: list[int] = []
    assigned = [-1] * n

    def pick() -> int:
        # DSATUR: most saturated first, then highest degree, then least index.
        best_v = -1
        key = (-1, -1, 0)
        for v in range(n):
            if assigned[v] >= 0:
                continue
            sat = sum(1 for m in classes if m & adj[v])
            cand = (sat, adj[v].bit_count(), -v)
            if cand > key:
                key = cand
                best_v = v
        return best_v

    def descend(colored: int):
        nonlocal best_k, best_masks
        if best_k == lower:
            return
        if len(classes) >= best_k:
            return
        if colored == n:
            best_k = len(classes)
            best_masks = list(classes)
            return
        v = pick()
        bit = 1 << v
        assigned[v] = 0
        for j in range(len(classes)):
            if classes[j] & adj[v]:
                continue
            if cap is not None and sizes[j] >= cap:
                continue
            classes[j] |= bit
            sizes[j] += 1
            descend(colored + 1)
            classes[j] ^= bit
            sizes[j] -= 1
        if len(classes) + 1 < best_k:
            classes.append(bit)
            sizes.append(1)
            descend(colored + 1)
            classes.pop()
            sizes.pop()
        assigned[v] = -1

    descend(0)
    return best_k, best_masks


@functools.lru_cache(maxsize=65536)
def _chi_cached(g: Graph, cap: int | None) -> int:
    return _color_bb(g.adj, g.n, cap)[0]


def chromatic_number(g: Graph, cap: int | None = None) -> int:
    """Exact chi(g); with ``cap`` set, the minimum class count among colorings
    whose classes all have size at most cap. chi of the empty graph is 0."""
    if cap is not None and cap < 1:
        raise ValueError("cap must be positive")
    return _chi_cached(g, cap)


def one_optimal_coloring(g: Graph, cap: int | None = None,
                         rng: random.Random | None = None) -> Coloring:
    """A single optimal (optionally cap-bounded) coloring.

    Deterministic without ``rng``; with it, the vertices are relabeled by a
    seeded shuffle first, which samples different optimal colorings.
    """
    if rng is None:
        _, masks = _color_bb(g.adj, g.n, cap)
        return Coloring.of([list(bits(m)) for m in masks])
    perm = list(range(g.n))
    rng.shuffle(perm)
    inv = [0] * g.n
    for new, old in enumerate(perm):
        inv[old] = new
    shuffled = Graph.from_edges(g.n, [(inv[u], inv[v]) for u, v in g.edges()])
    _, masks = _color_bb(shuffled.adj, g.n, cap)
    return Coloring.of([[perm[v] for v in bits(m)] for m in masks])


# ---------------------------------------------------------------------------
# Partition enumeration (canonical: each class is opened by its least vertex)
# ---------------------------------------------------------------------------


def _enum_partitions(adj: tuple[int, ...], n: int, k: int | None,
                     cap: int | None) -> Iterator[list[int]]:
    """All proper partitions (class masks); exactly ``k`` classes if k given."""
    if n == 0:
        if k in (None, 0):
            yield []
        return
    if k == 0:
        return
    if k is not None and cap is not None and k * cap < n:
        return
    masks: list[int] = []
    sizes: list[int] = []

    def rec(v: int):
        if v == n:
            if k is None or len(masks) == k:
                yield list(masks)
            return
        if k is not None and len(masks) + (n - v) < k:
            return
        bit = 1 << v
        av = adj[v]
        for j in range(len(masks)):
            if masks[j] & av:
                continue
            if cap is not None and sizes[j] >= cap:
                continue
            masks[j] |= bit
            sizes[j] += 1
            yield from rec(v + 1)
            masks[j] ^= bit
            sizes[j] -= 1
        if k is None or len(masks) < k:
            masks.append(bit)
            sizes.append(1)
            yield from rec(v + 1)
            masks.pop()
            sizes.pop()

    yield from rec(0)


def enumerate_colorings(g: Graph, guards: Guards = DEFAULT_GUARDS) -> Iterator[Coloring]:
    """Every proper coloring of ``g`` (any class count), canonical, each once."""
    if g.n > guards.full:
        raise GuardExceededError(
            f"full coloring enumeration guarded at n <= {guards.full} (graph has {g.n})"
        )
    for masks in _enum_partitions(g.adj, g.n, None, None):
        yield Coloring.of([list(bits(m)) for m in masks])


def enumerate_optimal_colorings(g: Graph, cap: int | None = None,
                                guards: Guards = DEFAULT_GUARDS) -> Iterator[Coloring]:
    """Every proper partition into exactly chi (or chi_cap) classes."""
    if g.n > guards.optimal:
        raise GuardExceededError(
            f"optimal coloring enumeration guarded at n <= {guards.optimal} (graph has {g.n})"
        )
    k = chromatic_number(g, cap)
    for masks in _enum_partitions(g.adj, g.n, k, cap):
        yield Coloring.of([list(bits(m)) for m in masks])


# ---------------------------------------------------------------------------
# Score maximization over optimal colorings (stinginess and friends)
# ---------------------------------------------------------------------------


def _best_partition_score(adj: tuple[int, ...], n: int, k: int, cap: int | None,
                          score: str, r: int = 0) -> tuple[int, list[int]]:
    """Maximize a per-class score over proper partitions into exactly ``k``
    classes (sizes <= cap). score: 'singletons' counts size-1 classes,
    'exact' counts classes of size exactly ``r``. Returns (best, witness)."""
    if n == 0:
        return 0, []
    masks: list[int] = []
    sizes: list[int] = []
    best = -1
    best_masks: list[int] = []

    def bound(placed: int) -> int:
        m = len(masks)
        if score == "singletons":
            return sum(1 for s in sizes if s == 1) + (k - m)
        full = sum(1 for s in sizes if s == r)
        pool = sum(s for s in sizes if s < r) + (n - placed)
        return full + min(pool // r, k - full)

    def rec(v: int):
        nonlocal best, best_masks
        if v == n:
            if len(masks) == k:
                got = (sum(1 for s in sizes if s == 1) if score == "singletons"
                       else sum(1 for s in sizes if s == r))
                if got > best:
                    best = got
                    best_masks = list(masks)
            return
        if len(masks) + (n - v) < k:
            return
        if bound(v) <= best:
            return
        bit = 1 << v
        av = adj[v]
        for j in range(len(masks)):
            if masks[j] & av:
                continue
            if cap is not None and sizes[j] >= cap:
                continue
            masks[j] |= bit
            sizes[j] += 1
            rec(v + 1)
            masks[j] ^= bit
            sizes[j] -= 1
        if len(masks) < k:
            masks.append(bit)
            sizes.append(1)
            rec(v + 1)
            masks.pop()
            sizes.pop()

    rec(0)
    return best, best_masks


@dataclass(frozen=True)
class ColoringStats:
    """chi, stinginess iota, and a stingy witness coloring."""

    chi: int
    iota: int
    stingy_witness: Coloring


@functools.lru_cache(maxsize=65536)
def _stats_cached(g: Graph, optimal_guard: int) -> ColoringStats:
    if g.n > optimal_guard:
        raise GuardExceededError(
            f"stinginess guarded at n <= {optimal_guard} (graph has {g.n})"
        )
    chi = chromatic_number(g)
    iota, masks = _best_partition_score(g.adj, g.n, chi, None, "singletons")
    return ColoringStats(chi, iota, Coloring.of([list(bits(m)) for m in masks]))


def stats(g: Graph, guards: Guards = DEFAULT_GUARDS) -> ColoringStats:
    """iota(g) = max singleton-class count over optimal colorings, by direct
    branch and bound; the enumeration route cross-checks this in tests."""
    return _stats_cached(g, guards.optimal)


@dataclass(frozen=True)
class BoundedStats:
    """The r-bounded family: chi_r, M_r, iota_r with witnesses."""

    r: int
    chi_r: int
    m_r: int
    iota_r: int
    m_witness: Coloring
    iota_witness: Coloring


@functools.lru_cache(maxsize=65536)
def _bounded_cached(g: Graph, r: int, optimal_guard: int) -> BoundedStats:
    if g.n > optimal_guard:
        raise GuardExceededError(
            f"r-bounded stats guarded at n <= {optimal_guard} (graph has {g.n})"
        )
    chi_r = chromatic_number(g, cap=r)
    m_r, m_masks = _best_partition_score(g.adj, g.n, chi_r, r, "exact", r)
    iota_r, i_masks = _best_partition_score(g.adj, g.n, chi_r, r, "singletons")
    return BoundedStats(
        r, chi_r, m_r, iota_r,
        Coloring.of([list(bits(m)) for m in m_masks]),
        Coloring.of([list(bits(m)) for m in i_masks]),
    )


def bounded_stats(g: Graph, r: int, guards: Guards = DEFAULT_GUARDS) -> BoundedStats:
    """M_r and iota_r maximize over the same set (optimal r-bounded colorings)
    but independently; their witnesses need not coincide."""
    if r < 1:
        raise ValueError("r must be positive")
    return _bounded_cached(g, r, guards.optimal)


# ---------------------------------------------------------------------------
# Constrained-coloring property framework
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColoringProperty:
    """A decidable predicate on colorings. The declared flags are claims made
    by the constructor; the verification operations below test them, nothing
    ever assumes them."""

    predicate: Callable[[Coloring], bool] = field(compare=False)
    name: str
    declared_frame_property: bool = False
    declared_singleton_friendly: bool = False

    def __call__(self, c: Coloring) -> bool:
        return bool(self.predicate(c))


def all_colorings_property() -> ColoringProperty:
    return ColoringProperty(lambda c: True, "all", True, True)


def b_r(r: int) -> ColoringProperty:
    """B_r: all classes of size at most r. Singleton-friendly only for r >= 2
    (merging two singletons makes a doubleton, which leaves B_1)."""
    if r < 1:
        raise ValueError("r must be positive")
    return ColoringProperty(
        predicate=lambda c: all(len(cls) <= r for cls in c.classes),
        name=f"B_{r}",
        declared_frame_property=True,
        declared_singleton_friendly=r >= 2,
    )


def chi_p(g: Graph, p: ColoringProperty,
          guards: Guards = DEFAULT_GUARDS) -> tuple[int, Coloring]:
    """Minimum class count among colorings satisfying ``p``, with witness."""
    if g.n > guards.full:
        raise GuardExceededError(
            f"chi_P guarded at n <= {guards.full} (graph has {g.n})"
        )
    if g.n == 0:
        c = Coloring(())
        if p(c):
            return 0, c
        raise PropertyUnsatisfiableError(f"property {p.name!r} unsatisfiable on this graph")
    for k in range(1, g.n + 1):
        for masks in _enum_partitions(g.adj, g.n, k, None):
            c = Coloring.of([list(bits(m)) for m in masks])
            if p(c):
                return k, c
    raise PropertyUnsatisfiableError(f"property {p.name!r} unsatisfiable on this graph")


def enumerate_p_optimal(g: Graph, p: ColoringProperty,
                        guards: Guards = DEFAULT_GUARDS) -> Iterator[Coloring]:
    """Every coloring satisfying ``p`` with exactly chi_P classes."""
    k, _ = chi_p(g, p, guards)
    for masks in _enum_partitions(g.adj, g.n, k, None):
        c = Coloring.of([list(bits(m)) for m in masks])
        if p(c):
            yield c


def _grouped_memberships(g: Graph, p: ColoringProperty, key, guards: Guards):
    groups: dict[object, set[bool]] = {}
    for c in enumerate_colorings(g, guards):
        groups.setdefault(key(c), set()).add(p(c))
    return groups


def is_frame_property(g: Graph, p: ColoringProperty,
                      guards: Guards = DEFAULT_GUARDS) -> bool:
    """True iff p's satisfying set is a union of frame-equivalence classes."""
    groups = _grouped_memberships(g, p, lambda c: c.frame(), guards)
    return all(len(vals) == 1 for vals in groups.values())


def check_frame3_sufficiency(g: Graph, p: ColoringProperty,
                             guards: Guards = DEFAULT_GUARDS) -> bool:
    """True iff membership in ``p`` depends only on the frame entries >= 3.
    Whenever true, both is_frame_property and is_singleton_friendly hold."""
    groups = _grouped_memberships(g, p, lambda c: c.frame_m(3), guards)
    return all(len(vals) == 1 for vals in groups.values())


def check_complete_condition(g: Graph, p: ColoringProperty,
                             guards: Guards = DEFAULT_GUARDS) -> bool:
    """True iff p's satisfying set is a union of (small-vertex-count, frame>=3)
    equivalence classes. Compared elsewhere against
    is_frame_property AND is_singleton_friendly; a disagreement is reported as
    a lemma violation, never silently resolved."""
    groups = _grouped_memberships(g, p, lambda c: (c.small(), c.frame_m(3)), guards)
    return all(len(vals) == 1 for vals in groups.values())


def merge_singletons(c: Coloring, a: int, b: int) -> Coloring:
    """Merge the singleton classes {a} and {b} into one doubleton."""
    rest = [cls for cls in c.classes if cls not in ((a,), (b,))]
    if len(rest) != len(c.classes) - 2:
        raise ValueError(f"{a} and {b} are not both singleton classes")
    return Coloring.of(rest + [(a, b)])


def is_singleton_friendly(g: Graph, p: ColoringProperty,
                          guards: Guards = DEFAULT_GUARDS) -> bool:
    """True iff every merge of two nonadjacent singleton classes of a
    satisfying coloring again satisfies ``p``."""
    for c in enumerate_colorings(g, guards):
        if not p(c):
            continue
        singles = c.singleton_vertices()
        for i in range(len(singles)):
            for j in range(i + 1, len(singles)):
                a, b = singles[i], singles[j]
                if g.has_edge(a, b):
                    continue
                if not p(merge_singletons(c, a, b)):
                    return False
    return True
