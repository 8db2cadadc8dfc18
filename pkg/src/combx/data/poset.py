from typing import List, Optional, Sequence, Tuple

import numpy as np

from combx.errors import CycleError, DomainError, NoGreatestElement
from combx.data.bits import iter_bits, mask_of


def transitive_closure(leq):
    r"""
    Computes the reflexive-transitive closure of a boolean relation matrix (Warshall).

    Args:
        leq (:python:`np.ndarray`, :math:`N \times N`): A boolean relation, :python:`leq[x, y]` meaning $x \leq y$.

    Returns:
        :python:`np.ndarray`: The closed relation.
    """
    closed = np.array(leq, dtype=bool, copy=True)
    np.fill_diagonal(closed, True)
    for k in range(len(closed)):
        closed |= closed[:, k : k + 1] & closed[k : k + 1, :]
    return closed


class FinitePoset:
    r"""
    A finite partially ordered set $(X, \leq)$, stored as its closed order relation.
    Points are the dense indices $0, \cdots, N-1$; labels are for presentation only.
    Every finite poset, equipped with the discrete topology, is a bi-Esakia space,
    so this is the universal frame object of :python:`combx`.

    Sets of points are passed around as :python:`int` bitmasks
    (bit :python:`i` set iff point :python:`i` is in the set);
    see :func:`~combx.data.bits.mask_of` and :func:`~combx.data.bits.iter_bits`.

    Args:
        leq (:python:`np.ndarray`, :math:`N \times N`):
            The order relation; it must be reflexive, transitive and antisymmetric.
        labels (:python:`Sequence[str]`, *optional*):
            Point labels; defaults to :python:`"0", "1", ...` (default: :python:`None`).

    Attributes:
        num_points (:python:`int`): Number of points $N$.
        full (:python:`int`): The mask of all points.
        up_masks (:python:`Tuple[int, ...]`): The principal upsets $\uparrow x$ as masks.
        down_masks (:python:`Tuple[int, ...]`): The principal downsets $\downarrow x$ as masks.
    """

    def __init__(self, leq, labels: Optional[Sequence[str]] = None):
        leq = np.array(leq, dtype=bool, copy=True)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise DomainError(f"The order relation must be a square matrix, got {leq.shape}.")
        n = leq.shape[0]
        if not leq.diagonal().all():
            raise DomainError("The order relation is not reflexive.")
        composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        if (composed & ~leq).any():
            raise DomainError("The order relation is not transitive.")
        both = leq & leq.T
        np.fill_diagonal(both, False)
        if both.any():
            x, y = map(int, np.argwhere(both)[0])
            raise CycleError(f"Points {x} and {y} are below each other.")

        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(label) for label in labels)
        if len(labels) != n:
            raise DomainError(f"{len(labels)} labels given for {n} points.")
        if len(set(labels)) != n:
            raise DomainError("Point labels must be distinct.")

        leq.setflags(write=False)
        self.leq = leq
        self.labels = labels
        self.num_points = n
        self.full = (1 << n) - 1
        self.up_masks = tuple(mask_of(np.flatnonzero(leq[x])) for x in range(n))
        self.down_masks = tuple(mask_of(np.flatnonzero(leq[:, x])) for x in range(n))
        self._label_to_index = {label: i for i, label in enumerate(labels)}

    def __len__(self):
        return self.num_points

    def __str__(self):
        covers = ", ".join(f"{self.labels[x]}<{self.labels[y]}" for x, y in self.covers())
        return f"FinitePoset with {self.num_points} points: [{covers}]"

    def __repr__(self):
        return f"FinitePoset(points={list(self.labels)}, covers={self.covers()})"

    def __eq__(self, other):
        return (
            isinstance(other, FinitePoset)
            and self.labels == other.labels
            and np.array_equal(self.leq, other.leq)
        )

    def __hash__(self):
        return hash((self.labels, self.up_masks))

    @property
    def points(self):
        return range(self.num_points)

    def index(self, label):
        """
        Returns the point index carrying :python:`label`.
        """
        try:
            return self._label_to_index[label]
        except KeyError:
            raise DomainError(f"Unknown point label: {label!r}.") from None

    def label_set(self, mask):
        return [self.labels[i] for i in iter_bits(mask)]

    def le(self, x, y):
        return bool(self.leq[x, y])

    def lt(self, x, y):
        return x != y and bool(self.leq[x, y])

    def up(self, mask):
        r"""
        Returns $\uparrow S = \{x : \exists s \in S\, (s \leq x)\}$ for the point set :python:`mask`.
        """
        result = 0
        for i in iter_bits(mask):
            result |= self.up_masks[i]
        return result

    def down(self, mask):
        r"""
        Returns $\downarrow S = \{x : \exists s \in S\, (x \leq s)\}$ for the point set :python:`mask`.
        """
        result = 0
        for i in iter_bits(mask):
            result |= self.down_masks[i]
        return result

    def upc(self, mask):
        r"""
        Returns the strict upset $\{x : \exists s \in S\, (s < x)\}$.
        """
        result = 0
        for i in iter_bits(mask):
            result |= self.up_masks[i] & ~(1 << i)
        return result

    def downc(self, mask):
        r"""
        Returns the strict downset $\{x : \exists s \in S\, (x < s)\}$.
        """
        result = 0
        for i in iter_bits(mask):
            result |= self.down_masks[i] & ~(1 << i)
        return result

    def is_upset(self, mask):
        return self.up(mask) == mask

    def is_downset(self, mask):
        return self.down(mask) == mask

    def maximal(self, mask=None):
        """
        Returns the maximal points of :python:`mask` (of the whole poset by default).
        """
        mask = self.full if mask is None else mask
        return mask_of(i for i in iter_bits(mask) if self.up_masks[i] & mask == 1 << i)

    def minimal(self, mask=None):
        """
        Returns the minimal points of :python:`mask` (of the whole poset by default).
        """
        mask = self.full if mask is None else mask
        return mask_of(i for i in iter_bits(mask) if self.down_masks[i] & mask == 1 << i)

    def has_co_root(self):
        return any(self.down_masks[i] == self.full for i in self.points)

    def co_root(self):
        """
        Returns the greatest point.

        Raises:
            :class:`~combx.errors.NoGreatestElement`: When there is none.
        """
        for i in self.points:
            if self.down_masks[i] == self.full:
                return i
        raise NoGreatestElement(f"{self} has no greatest element.")

    def immediate_predecessors(self, x):
        r"""
        Returns $\prec x = \{z : z < x \text{ and no } w \text{ with } z < w < x\}$.
        """
        below = self.down_masks[x] & ~(1 << x)
        return self.maximal(below)

    def immediate_successors(self, x):
        above = self.up_masks[x] & ~(1 << x)
        return self.minimal(above)

    def interval(self, y, x):
        r"""
        Returns $[y, x] = \uparrow y \cap \downarrow x$.
        """
        return self.up_masks[y] & self.down_masks[x]

    def is_chain(self, mask=None):
        mask = self.full if mask is None else mask
        return all(
            self.leq[i, j] or self.leq[j, i]
            for i in iter_bits(mask)
            for j in iter_bits(mask)
        )

    def covers(self) -> List[Tuple[int, int]]:
        """
        Returns the Hasse diagram as a list of cover pairs :python:`(x, y)` with $x \\prec y$.
        """
        return [
            (z, x) for x in self.points for z in iter_bits(self.immediate_predecessors(x))
        ]

    def depth(self):
        """
        Returns the number of points of a longest chain (:python:`0` for the empty poset).
        """
        heights = {}
        for x in sorted(self.points, key=lambda i: bin(self.down_masks[i]).count("1")):
            below = self.downc(1 << x)
            heights[x] = 1 + max((heights[z] for z in iter_bits(below)), default=0)
        return max(heights.values(), default=0)

    def height(self, x):
        """
        Returns the number of points strictly above :python:`x`; the co-root of a co-tree has height 0.
        """
        return bin(self.up_masks[x]).count("1") - 1

    def components(self):
        """
        Returns the connected components (of the comparability graph) as masks, ordered by least point.
        """
        remaining, comps = self.full, []
        while remaining:
            comp = remaining & -remaining
            while True:
                grown = self.up(comp) | self.down(comp)
                grown = self.up(grown) | self.down(grown)
                if grown == comp:
                    break
                comp = grown
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_cotree(self):
        r"""
        A co-tree has a greatest element and all of its principal upsets are chains.
        """
        if self.num_points == 0 or not self.has_co_root():
            return False
        return all(self.is_chain(self.up_masks[x]) for x in self.points)

    def is_coforest(self):
        return all(self.subposet(c).is_cotree() for c in self.components())

    def subposet(self, mask):
        """
        Returns the induced suborder on :python:`mask`, keeping labels and the order of indices.
        """
        idx = list(iter_bits(mask))
        return FinitePoset(self.leq[np.ix_(idx, idx)], [self.labels[i] for i in idx])

    def dual(self):
        return FinitePoset(self.leq.T, self.labels)

    def relabel(self, perm, labels=None):
        """
        Returns the isomorphic copy in which point :python:`i` becomes point :python:`perm[i]`.
        """
        n = self.num_points
        inverse = [0] * n
        for i, j in enumerate(perm):
            inverse[j] = i
        leq = self.leq[np.ix_(inverse, inverse)]
        if labels is None:
            labels = [self.labels[inverse[j]] for j in range(n)]
        return FinitePoset(leq, labels)


def from_edges(n, covers, labels=None):
    r"""
    Builds a poset from any edge list by closing it reflexively and transitively.

    Args:
        n (:python:`int`): Number of points.
        covers (:python:`Iterable[Tuple[int, int]]`): Pairs :python:`(x, y)` meaning $x \leq y$.
        labels (:python:`Sequence[str]`, *optional*): Point labels (default: :python:`None`).

    Returns:
        :class:`~combx.data.poset.FinitePoset`: The closed poset.

    Raises:
        :class:`~combx.errors.CycleError`: When the closure violates antisymmetry.
    """
    if n < 0:
        raise DomainError(f"Number of points must be nonnegative, got {n}.")
    leq = np.zeros((n, n), dtype=bool)
    for x, y in covers:
        if not (0 <= x < n and 0 <= y < n):
            raise DomainError(f"Edge ({x}, {y}) leaves the point range 0..{n - 1}.")
        leq[x, y] = True
    return FinitePoset(transitive_closure(leq), labels)


def chain(n, labels=None):
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], labels)


def antichain(n, labels=None):
    return from_edges(n, [], labels)
