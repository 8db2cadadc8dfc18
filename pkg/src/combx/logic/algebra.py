import logging
from dataclasses import dataclass
from itertools import product
from typing import Tuple

from combx.data.bits import iter_bits, mask_of
from combx.data.configs import resolve_configs
from combx.data.formula import And, Bot, Coimp, Imp, Or, Top, Var, iter_postorder, variables
from combx.data.poset import FinitePoset
from combx.errors import DomainError, LimitExceeded, NotCoTree, NotUpset, UnassignedVariable
from combx.logic.semantics import coimp_set, imp_set
from combx.logic.validity import all_upsets

log = logging.getLogger(__name__)


def _check_upsets(X, *sets):
    for U in sets:
        if U & ~X.full or not X.is_upset(U):
            raise NotUpset(f"{X.label_set(U & X.full)} is not an upset of {X}.")


def heyting_imp(X, U, V):
    r"""
    Returns the Heyting implication $U \to V = X \setminus \downarrow(U \setminus V)$ of two upsets.

    Raises:
        :class:`~combx.errors.NotUpset`: When :python:`U` or :python:`V` is not an upset.
    """
    _check_upsets(X, U, V)
    return imp_set(X, U, V)


def coimp(X, U, V):
    r"""
    Returns the co-implication $U \leftarrow V = \uparrow(U \setminus V)$ of two upsets.

    Raises:
        :class:`~combx.errors.NotUpset`: When :python:`U` or :python:`V` is not an upset.
    """
    _check_upsets(X, U, V)
    return coimp_set(X, U, V)


def generated_subalgebra(X, gens):
    r"""
    Computes the bi-Heyting subalgebra of $\mathrm{Up}(X)$ generated by :python:`gens`:
    the closure of the generators, $\emptyset$ and $X$ under $\cap$, $\cup$, $\to$ and $\leftarrow$.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The frame.
        gens (:python:`Iterable[int]`): Generating upsets.

    Returns:
        :python:`FrozenSet[int]`: The elements of the subalgebra.
    """
    gens = list(gens)
    _check_upsets(X, *gens)
    elements = {0, X.full, *gens}
    frontier = list(elements)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(elements):
                for U, V in [(a, b), (b, a)]:
                    new.update([U & V, U | V, imp_set(X, U, V), coimp_set(X, U, V)])
        frontier = list(new - elements)
        elements |= new
    return frozenset(elements)


class UpsetAlgebra:
    r"""
    The dual algebra $X^* = (\mathrm{Up}(X), \cup, \cap, \to, \leftarrow, \emptyset, X)$ of a finite poset.
    Elements are upset masks; operations are the set formulas of :func:`heyting_imp` and :func:`coimp`.

    Args:
        frame (:class:`~combx.data.poset.FinitePoset`): The frame.
        configs (:class:`~combx.data.configs.SearchConfigs`, *optional*): Search configurations (default: :python:`None`).
    """

    def __init__(self, frame, configs=None):
        self.frame = frame
        self.elements = all_upsets(frame, configs)
        self._members = frozenset(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, U):
        return U in self._members

    def __iter__(self):
        return iter(self.elements)

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return self.frame.full

    def meet(self, U, V):
        return U & V

    def join(self, U, V):
        return U | V

    def imp(self, U, V):
        return heyting_imp(self.frame, U, V)

    def coimp(self, U, V):
        return coimp(self.frame, U, V)

    def evaluate(self, f, assignment):
        r"""
        Evaluates :python:`f` in the algebra, sending each variable to its assigned upset.

        Returns:
            :python:`int`: The value of :python:`f`; it equals the forcing set of :python:`f`
            in the Kripke model with the same assignment.
        """
        _check_upsets(self.frame, *assignment.values())
        values = {}
        for g in iter_postorder(f):
            match g:
                case Var(name):
                    if name not in assignment:
                        raise UnassignedVariable(f"Variable {name!r} is not assigned.")
                    values[g] = assignment[name]
                case Bot():
                    values[g] = self.bottom
                case Top():
                    values[g] = self.top
                case And(left, right):
                    values[g] = self.meet(values[left], values[right])
                case Or(left, right):
                    values[g] = self.join(values[left], values[right])
                case Imp(left, right):
                    values[g] = imp_set(self.frame, values[left], values[right])
                case Coimp(left, right):
                    values[g] = coimp_set(self.frame, values[left], values[right])
        return values[f]

    def is_generated_by(self, gens):
        return len(generated_subalgebra(self.frame, gens)) == len(self)

    def to_dict(self):
        return {"size": len(self), "elements": [self.frame.label_set(U) for U in self.elements]}


def algebra_is_valid(X, f, configs=None):
    r"""
    Returns whether $f$ evaluates to the top element $X$ of $X^*$ under every assignment of
    upsets to its variables, enumerated as in :func:`~combx.logic.validity.find_countermodel`.
    """
    A = UpsetAlgebra(X, configs)
    names = variables(f)
    for values in product(A.elements, repeat=len(names)):
        if A.evaluate(f, dict(zip(names, values))) != A.top:
            return False
    return True


@dataclass(frozen=True)
class BiEPartition:
    r"""
    A partition of the points of a finite poset.
    Blocks are stored as masks sorted by their least point.

    Args:
        frame (:class:`~combx.data.poset.FinitePoset`): The frame.
        blocks (:python:`Tuple[int, ...]`): The blocks.
    """

    frame: FinitePoset
    blocks: Tuple[int, ...]

    def __post_init__(self):
        union = 0
        for block in self.blocks:
            if block == 0 or block & union or block & ~self.frame.full:
                raise DomainError("Blocks must be nonempty, disjoint point sets of the frame.")
            union |= block
        if union != self.frame.full:
            raise DomainError("Blocks must cover every point.")
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=lambda b: b & -b)))

    @classmethod
    def from_points(cls, frame, blocks):
        """
        Builds a partition from blocks given as iterables of point indices or labels.
        """
        masks = []
        for block in blocks:
            masks.append(mask_of(frame.index(p) if isinstance(p, str) else p for p in block))
        return cls(frame, tuple(masks))

    @classmethod
    def identity(cls, frame):
        return cls(frame, tuple(1 << x for x in frame.points))

    def block_of(self, x):
        for block in self.blocks:
            if block >> x & 1:
                return block
        raise DomainError(f"Point {x} is not in the frame.")

    def saturate(self, mask):
        r"""
        Returns $E[S]$, the union of the blocks meeting :python:`mask`.
        """
        return sum(block for block in self.blocks if block & mask)

    @property
    def is_proper(self):
        """
        Whether some block has more than one point, i.e., the partition is not the identity.
        """
        return len(self.blocks) < self.frame.num_points

    def to_dict(self):
        return {"blocks": [self.frame.label_set(block) for block in self.blocks]}


def _saturated_upset_closure(X, E, mask):
    while True:
        grown = E.saturate(X.up(mask))
        if grown == mask:
            return mask
        mask = grown


def is_bie_partition(X, P):
    r"""
    Checks the three conditions of a bi-E-partition $E$ of a finite poset:

    - Up: $xEy$ and $w \geq y$ imply $vEw$ for some $v \geq x$;
    - Down: $xEy$ and $w \leq y$ imply $vEw$ for some $v \leq x$;
    - Refined: non-equivalent points are separated by an $E$-saturated upset.

    On a finite poset the least saturated upset containing $x$ is computed by iterating
    $\uparrow$ and saturation, and $x, y$ are separated iff one of them lies outside the
    least saturated upset of the other.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The frame.
        P (:class:`BiEPartition` or :python:`Iterable[Iterable[int]]`): The partition.

    Returns:
        :python:`bool`: Whether :python:`P` is a bi-E-partition.
    """
    E = P if isinstance(P, BiEPartition) else BiEPartition.from_points(X, P)
    for block in E.blocks:
        members = list(iter_bits(block))
        for x in members:
            for y in members:
                for w in iter_bits(X.up_masks[y]):
                    if not E.block_of(w) & X.up_masks[x]:
                        return False
                for w in iter_bits(X.down_masks[y]):
                    if not E.block_of(w) & X.down_masks[x]:
                        return False

    closures = [_saturated_upset_closure(X, E, 1 << x) for x in X.points]
    for x in X.points:
        for y in X.points:
            if x < y and not E.block_of(x) >> y & 1:
                if closures[x] >> y & 1 and closures[y] >> x & 1:
                    return False
    return True


def iter_set_partitions(mask):
    """
    Yields every partition of the point set :python:`mask` as a list of block masks
    (restricted growth order on the points in increasing index).
    """
    points = list(iter_bits(mask))
    if not points:
        yield []
        return

    def grow(k, blocks):
        if k == len(points):
            yield list(blocks)
            return
        bit = 1 << points[k]
        for i in range(len(blocks)):
            blocks[i] |= bit
            yield from grow(k + 1, blocks)
            blocks[i] &= ~bit
        blocks.append(bit)
        yield from grow(k + 1, blocks)
        blocks.pop()

    yield from grow(0, [])


def _check_partition_limit(X, configs):
    configs = resolve_configs(configs)
    if X.num_points > configs.partition_limit:
        raise LimitExceeded(
            f"Partition enumeration is limited to {configs.partition_limit} points, got {X.num_points}."
        )


def bie_partitions(X, configs=None):
    """
    Yields every bi-E-partition of :python:`X`.

    Raises:
        :class:`~combx.errors.LimitExceeded`: When :python:`X` has more than :python:`partition_limit` points.
    """
    _check_partition_limit(X, configs)
    for blocks in iter_set_partitions(X.full):
        E = BiEPartition(X, tuple(blocks))
        if is_bie_partition(X, E):
            yield E


def color(X, gens, x):
    r"""
    Returns the color of :python:`x`: the membership vector $(x \in U_1, \cdots, x \in U_n)$ of
    :python:`x` in the generators, as a tuple of :python:`0` and :python:`1`.
    """
    return tuple(U >> x & 1 for U in gens)


def coloring_generates(X, gens, configs=None):
    r"""
    Decides whether :python:`gens` generate $\mathrm{Up}(X)$ through the coloring criterion:
    they do iff every proper bi-E-partition of $X$ merges two points of different colors.
    Only partitions refining the color classes are enumerated, since those are the ones
    that could violate the criterion.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The frame.
        gens (:python:`Iterable[int]`): Generating upsets.
        configs (:class:`~combx.data.configs.SearchConfigs`, *optional*): Search configurations (default: :python:`None`).

    Returns:
        :python:`bool`: Whether the generators generate the whole upset algebra.

    Raises:
        :class:`~combx.errors.LimitExceeded`: When :python:`X` has more than :python:`partition_limit` points.
    """
    gens = list(gens)
    _check_upsets(X, *gens)
    _check_partition_limit(X, configs)

    classes = {}
    for x in X.points:
        classes[color(X, gens, x)] = classes.get(color(X, gens, x), 0) | 1 << x
    per_class = [list(iter_set_partitions(mask)) for mask in classes.values()]
    for choice in product(*per_class):
        blocks = tuple(block for blocks in choice for block in blocks)
        E = BiEPartition(X, blocks)
        if E.is_proper and is_bie_partition(X, E):
            log.debug(f"Monochrome proper bi-E-partition: {E.to_dict()}.")
            return False
    return True


def _subtree_code(X, x, memo):
    if x not in memo:
        children = sorted(_subtree_code(X, z, memo) for z in iter_bits(X.immediate_predecessors(x)))
        memo[x] = "(" + "".join(children) + ")"
    return memo[x]


def downset_isomorphism(X, w, v):
    r"""
    Finds an order isomorphism $\downarrow w \to \downarrow v$ in a co-tree, where both downsets
    are trees under the immediate-predecessor relation; children are matched by their
    canonical subtree codes.

    Returns:
        :python:`Optional[Dict[int, int]]`: The isomorphism, or :python:`None` when there is none.
    """
    if not X.is_cotree():
        raise NotCoTree(f"{X} is not a co-tree.")
    memo = {}
    if _subtree_code(X, w, memo) != _subtree_code(X, v, memo):
        return None
    mapping, stack = {}, [(w, v)]
    while stack:
        a, b = stack.pop()
        mapping[a] = b
        kids_a = sorted(iter_bits(X.immediate_predecessors(a)), key=lambda z: _subtree_code(X, z, memo))
        kids_b = sorted(iter_bits(X.immediate_predecessors(b)), key=lambda z: _subtree_code(X, z, memo))
        stack.extend(zip(kids_a, kids_b))
    return mapping


def twin_partition(X, w, v):
    r"""
    For distinct points $w, v$ of a co-tree with a common immediate successor and order-isomorphic
    downsets, returns the partition pairing every $x \in \downarrow w$ with its image in
    $\downarrow v$, all other points staying singletons.

    Returns:
        :python:`Optional[BiEPartition]`: The partition, or :python:`None` when the premises fail.

    Raises:
        :class:`~combx.errors.NotCoTree`: When :python:`X` is not a co-tree.
    """
    if not X.is_cotree():
        raise NotCoTree(f"{X} is not a co-tree.")
    if w == v:
        raise DomainError("Twin points must be distinct.")
    if not X.immediate_successors(w) & X.immediate_successors(v):
        return None
    mapping = downset_isomorphism(X, w, v)
    if mapping is None:
        return None
    paired = X.down_masks[w] | X.down_masks[v]
    blocks = [1 << a | 1 << b for a, b in mapping.items()]
    blocks += [1 << x for x in iter_bits(X.full & ~paired)]
    return BiEPartition(X, tuple(blocks))


def is_isolated_chain(X, y, x):
    r"""
    Returns whether $[y, x]$ ($y < x$) is an isolated chain of the co-tree :python:`X`:
    $\downarrow x \setminus [y, x] \subseteq \downarrow y \setminus \{y\}$.
    """
    if not X.is_cotree():
        raise NotCoTree(f"{X} is not a co-tree.")
    if not X.lt(y, x):
        return False
    return X.down_masks[x] & ~X.interval(y, x) & ~X.downc(1 << y) == 0


def isolated_chains(X):
    """
    Lists all pairs :python:`(y, x)` such that $[y, x]$ is an isolated chain.
    """
    return [(y, x) for x in X.points for y in X.points if is_isolated_chain(X, y, x)]


def isolated_chain_partition(X, y, x):
    r"""
    Returns the partition collapsing the isolated chain $[y, x]$ into one block.

    Raises:
        :class:`~combx.errors.DomainError`: When $[y, x]$ is not an isolated chain.
    """
    if not is_isolated_chain(X, y, x):
        raise DomainError(f"[{X.labels[y]}, {X.labels[x]}] is not an isolated chain.")
    chain = X.interval(y, x)
    blocks = [chain] + [1 << z for z in iter_bits(X.full & ~chain)]
    return BiEPartition(X, tuple(blocks))
