"""Box complexes B(G), B_0(G) and their mod-2 homology.

Complex vertices ``(v, 1)`` and ``(v, 2)`` are encoded as bits ``v`` and
``n + v`` of an int, so a simplex ``A ⊎ B`` is the mask ``A | B << n`` and the
involution swaps the two halves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import Graph, bits_to_list, direct_product, popcount

BOX_CAP = 10


class ComplexSizeError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex on ``2 * n_graph`` tagged vertices with a free involution.

    ``simplices[d]`` holds the sorted masks of the ``d``-dimensional simplices.
    """

    n_graph: int
    simplices: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    def vertices(self) -> list[tuple[int, int]]:
        return [self.tag(s.bit_length() - 1) for s in self.simplices[0]] if self.simplices else []

    def tag(self, bit: int) -> tuple[int, int]:
        return (bit, 1) if bit < self.n_graph else (bit - self.n_graph, 2)

    def involution(self, mask: int) -> int:
        low = (1 << self.n_graph) - 1
        return ((mask & low) << self.n_graph) | (mask >> self.n_graph)

    def f_vector(self) -> list[int]:
        return [len(s) for s in self.simplices]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.f_vector()))

    def __contains__(self, mask: int) -> bool:
        d = popcount(mask) - 1
        return 0 <= d <= self.dim and mask in self._lookup[d]

    @property
    def _lookup(self) -> list[set[int]]:
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = [set(s) for s in self.simplices]
            object.__setattr__(self, "_lookup_cache", cache)
        return cache

    def is_downward_closed(self) -> bool:
        for d in range(1, len(self.simplices)):
            below = self._lookup[d - 1]
            for s in self.simplices[d]:
                if any(s ^ (1 << b) not in below for b in bits_to_list(s)):
                    return False
        return True

    def involution_is_valid(self) -> bool:
        """The swap is a simplicial map, an involution, and fixed-point free on vertices."""
        for d, layer in enumerate(self.simplices):
            for s in layer:
                image = self.involution(s)
                if image not in self._lookup[d] or self.involution(image) != s:
                    return False
        return all(self.involution(1 << b) != (1 << b) for b in range(2 * self.n_graph))


def from_maximal(n_graph: int, maximal: Iterable[Iterable[tuple[int, int]]]) -> SimplicialComplex:
    """Downward closure of the given simplices (lists of tagged vertices)."""
    masks = set()
    for simplex in maximal:
        top = 0
        for v, side in simplex:
            top |= 1 << (v if side == 1 else n_graph + v)
        sub = top
        while sub:
            masks.add(sub)
            sub = (sub - 1) & top
    return _layered(n_graph, masks)


def _layered(n_graph: int, masks: Iterable[int]) -> SimplicialComplex:
    layers: dict[int, list[int]] = {}
    for s in masks:
        layers.setdefault(popcount(s) - 1, []).append(s)
    top = max(layers, default=-1)
    return SimplicialComplex(n_graph, tuple(tuple(sorted(layers.get(d, []))) for d in range(top + 1)))


def _side_sets(g: Graph) -> Iterator[tuple[int, int]]:
    """Nonempty vertex sets with a nonempty common neighborhood, with that neighborhood."""
    adj = g.adj

    def grow(start: int, mask: int, common: int):
        for v in range(start, g.n):
            nxt = common & adj[v]
            if nxt:
                yield mask | (1 << v), nxt
                yield from grow(v + 1, mask | (1 << v), nxt)

    yield from grow(0, 0, (1 << g.n) - 1)


def _subsets(bits: int) -> Iterator[int]:
    sub = bits
    while sub:
        yield sub
        sub = (sub - 1) & bits


def _box_masks(g: Graph, with_all_one_sided: bool) -> set[int]:
    n = g.n
    masks: set[int] = set()
    for a, common in _side_sets(g):
        masks.add(a)
        masks.add(a << n)
        for b in _subsets(common):
            masks.add(a | (b << n))
    if with_all_one_sided:
        for a in _subsets((1 << n) - 1):
            masks.add(a)
            masks.add(a << n)
    return masks


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise ComplexSizeError(f"box complex of a {g.n}-vertex graph exceeds the cap of {cap} vertices")


def box_complex(g: Graph, cap: int = BOX_CAP) -> SimplicialComplex:
    """B(G): ``A ⊎ B`` with ``A x B`` complete bipartite; one-sided only with a common neighbor."""
    _check_cap(g, cap)
    return _layered(g.n, _box_masks(g, with_all_one_sided=False))


def box_complex0(g: Graph, cap: int = BOX_CAP) -> SimplicialComplex:
    """B_0(G): as B(G) but every ``A ⊎ ∅`` and ``∅ ⊎ B`` is a simplex."""
    _check_cap(g, cap)
    return _layered(g.n, _box_masks(g, with_all_one_sided=True))


# -- GF(2) homology ------------------------------------------------------------


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of int-bitset rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            hb = row.bit_length() - 1
            p = pivots.get(hb)
            if p is None:
                pivots[hb] = row
                rank += 1
                break
            row ^= p
    return rank


def boundary_rows(k: SimplicialComplex, d: int) -> list[int]:
    """Rows of the boundary map from ``d``-simplices to ``(d-1)``-simplices, one per ``d``-simplex."""
    if d <= 0 or d > k.dim:
        return []
    index = {s: i for i, s in enumerate(k.simplices[d - 1])}
    rows = []
    for s in k.simplices[d]:
        row = 0
        for b in bits_to_list(s):
            row |= 1 << index[s ^ (1 << b)]
        rows.append(row)
    return rows


@dataclass(frozen=True)
class BettiSequence:
    """Mod-2 Betti numbers ``values[d]`` for ``d = 0..dim``.

    Equality ignores trailing zeros, and sequences compare equal to plain
    tuples or lists. The empty complex has ``values == ()`` and ``empty``
    set; its reduced homology is ``β̃_{-1} = 1``, kept out of ``values``.
    """

    values: tuple[int, ...]
    reduced: bool = False
    empty: bool = False

    def trimmed(self) -> tuple[int, ...]:
        vals = list(self.values)
        while len(vals) > 1 and vals[-1] == 0:
            vals.pop()
        return tuple(vals)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BettiSequence):
            return (self.reduced, self.empty, self.trimmed()) == (other.reduced, other.empty, other.trimmed())
        if isinstance(other, (tuple, list)):
            vals = list(other)
            while len(vals) > 1 and vals[-1] == 0:
                vals.pop()
            return self.trimmed() == tuple(vals)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.reduced, self.empty, self.trimmed()))

    def __getitem__(self, d: int) -> int:
        return self.values[d] if 0 <= d < len(self.values) else 0

    def __len__(self) -> int:
        return len(self.values)


def betti_gf2(k: SimplicialComplex, reduced: bool = False) -> BettiSequence:
    if k.is_empty:
        return BettiSequence((), reduced=reduced, empty=True)
    ranks = [gf2_rank(boundary_rows(k, d)) for d in range(k.dim + 2)]
    values = [len(k.simplices[d]) - ranks[d] - ranks[d + 1] for d in range(k.dim + 1)]
    assert sum((-1) ** d * b for d, b in enumerate(values)) == k.euler_characteristic()
    if reduced:
        values[0] -= 1
    return BettiSequence(tuple(values), reduced=reduced)


def _nonzero_reduced(seq: BettiSequence) -> dict[int, int]:
    """Nonzero reduced Betti numbers keyed by dimension, ``-1`` included."""
    if seq.empty:
        return {-1: 1}
    return {d: b for d, b in enumerate(seq.values) if b}


def check_suspension(g: Graph, cap: int = BOX_CAP) -> bool:
    """Reduced homology of B_0(G) equals that of B(G) shifted up one dimension."""
    rb = _nonzero_reduced(betti_gf2(box_complex(g, cap), reduced=True))
    rb0 = _nonzero_reduced(betti_gf2(box_complex0(g, cap), reduced=True))
    return rb0 == {d + 1: b for d, b in rb.items()}


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def check_kunneth_product(f: Graph, g: Graph, cap: int = BOX_CAP) -> bool:
    """Betti numbers of B(F x G) equal the convolution of those of B(F) and B(G)."""
    bf = betti_gf2(box_complex(f, cap))
    bg = betti_gf2(box_complex(g, cap))
    if bf.empty or bg.empty:
        raise ValueError("Künneth check needs nonempty box complexes (graphs with edges)")
    product = betti_gf2(box_complex(direct_product(f, g), cap))
    return product == convolve(bf.values, bg.values)
