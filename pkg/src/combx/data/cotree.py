from dataclasses import dataclass
from typing import Optional

import networkx as nx

from combx.data.poset import from_edges
from combx.errors import DomainError, LimitExceeded, NotCoTree

MAX_ENUMERATION_SIZE = 10
ROOTED_TREE_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]

STRUCTURE_TAGS = ["Comb", "HComb", "OtherCoTree", "CoForest", "NotCoForest"]


@dataclass(frozen=True)
class StructureClass:
    r"""
    The structural class of a finite poset, as computed by :func:`~combx.data.cotree.classify`.

    Args:
        tag (:python:`str`): One of :python:`"Comb"`, :python:`"HComb"`, :python:`"OtherCoTree"`,
            :python:`"CoForest"` and :python:`"NotCoForest"`.
        n (:python:`int`, *optional*): The comb index; set only for :python:`"Comb"` and :python:`"HComb"`
            (default: :python:`None`).
    """

    tag: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.tag not in STRUCTURE_TAGS:
            raise DomainError(f"Invalid structure tag: {self.tag}.")
        if (self.tag in ["Comb", "HComb"]) != (self.n is not None):
            raise DomainError(f"Structure tag {self.tag} with index {self.n}.")

    def __str__(self):
        return self.tag if self.n is None else f"{self.tag}({self.n})"

    def to_dict(self):
        return {"tag": self.tag} if self.n is None else {"tag": self.tag, "n": self.n}


def comb_spine(i):
    return 2 * (i - 1)


def comb_tooth(i):
    return 2 * (i - 1) + 1


def make_comb(n):
    r"""
    Builds the $n$-comb $C_n$: a spine $x_1 < x_2 < \cdots < x_n$ with one tooth $x_i' \prec x_i$ per
    spine point. The co-root is $x_n$ and the minimal points are exactly the teeth.
    Spine point $x_i$ has index $2(i-1)$ and label :python:`"x{i}"`;
    tooth $x_i'$ has index $2(i-1)+1$ and label :python:`"x{i}p"`.

    Args:
        n (:python:`int`): Number of spine points, at least :python:`1`.

    Returns:
        :class:`~combx.data.poset.FinitePoset`: The comb with $2n$ points.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"A comb needs a positive size, got {n}.")
    covers, labels = [], []
    for i in range(1, n + 1):
        labels += [f"x{i}", f"x{i}p"]
        covers.append((comb_tooth(i), comb_spine(i)))
        if i < n:
            covers.append((comb_spine(i), comb_spine(i + 1)))
    return from_edges(2 * n, covers, labels)


def hcomb_spine(i):
    return 0 if i == 0 else 2 * i - 1


def hcomb_tooth(i):
    return 2 * i


def make_hcomb(n):
    r"""
    Builds the $n$-hcomb $C_n'$: the $n$-comb on $y_1 < \cdots < y_n$ (teeth $y_i'$)
    with a handle $y_0 \prec y_1$. The $0$-hcomb is the singleton $\{y_0\}$.
    Handle $y_0$ has index $0$, spine point $y_i$ index $2i-1$ and tooth $y_i'$ index $2i$.

    Args:
        n (:python:`int`): Number of spine points above the handle, at least :python:`0`.

    Returns:
        :class:`~combx.data.poset.FinitePoset`: The hcomb with $2n+1$ points.
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"An hcomb needs a nonnegative size, got {n}.")
    covers, labels = [], ["y0"]
    for i in range(1, n + 1):
        labels += [f"y{i}", f"y{i}p"]
        covers.append((hcomb_spine(i - 1), hcomb_spine(i)))
        covers.append((hcomb_tooth(i), hcomb_spine(i)))
    return from_edges(2 * n + 1, covers, labels)


def hcomb_collapse_map(n):
    r"""
    The surjective bi-p-morphism $C_{n+1} \twoheadrightarrow C_n'$ identifying $x_1$ and $x_1'$.

    Returns:
        :python:`List[int]`: Target index of every point of :python:`make_comb(n + 1)`.
    """
    if n < 0:
        raise DomainError(f"An hcomb needs a nonnegative size, got {n}.")
    mapping = [0] * (2 * (n + 1))
    for i in range(2, n + 2):
        mapping[comb_spine(i)] = hcomb_spine(i - 1)
        mapping[comb_tooth(i)] = hcomb_tooth(i - 1)
    return mapping


def comb_collapse_map(n, i):
    r"""
    The surjective bi-p-morphism $C_{n+1} \twoheadrightarrow C_n$ identifying the spine pair
    $(x_i, x_i')$ with $(x_{i+1}, x_{i+1}')$.

    Args:
        n (:python:`int`): Size of the target comb.
        i (:python:`int`): The lower of the two identified pairs, :python:`1 <= i <= n`.

    Returns:
        :python:`List[int]`: Target index of every point of :python:`make_comb(n + 1)`.
    """
    if not 1 <= i <= n:
        raise DomainError(f"Pair index {i} outside 1..{n}.")
    mapping = []
    for j in range(1, n + 2):
        k = j if j <= i else j - 1
        mapping += [comb_spine(k), comb_tooth(k)]
    return mapping


def _rooted_tree(X):
    T = nx.Graph()
    T.add_nodes_from(X.points)
    T.add_edges_from(X.covers())
    return T


def _bracket(nested):
    return "(" + "".join(_bracket(child) for child in nested) + ")"


def canonical_code(X):
    r"""
    Computes a canonical code of a co-tree: the order dual of a co-tree is a rooted tree,
    so the code is the AHU bracket string of that rooted tree in canonical
    (sorted-children) form. Two co-trees have equal codes iff they are order-isomorphic.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): A co-tree.

    Returns:
        :python:`bytes`: The canonical code.

    Raises:
        :class:`~combx.errors.NotCoTree`: When :python:`X` is not a co-tree.
    """
    if not X.is_cotree():
        raise NotCoTree(f"{X} is not a co-tree.")
    nested = nx.to_nested_tuple(_rooted_tree(X), X.co_root(), canonical_form=True)
    return _bracket(nested).encode("ascii")


def cotree_from_rooted_tree(T, root):
    """
    Turns a rooted (undirected) tree into the co-tree in which every node lies below its parent.
    Points are numbered in breadth-first order from the root, which becomes point :python:`0`.
    """
    order = [root] + [v for _, v in nx.bfs_edges(T, root)]
    index = {v: i for i, v in enumerate(order)}
    covers = [(index[v], index[u]) for u, v in nx.bfs_edges(T, root)]
    return from_edges(len(order), covers)


def enumerate_cotrees(max_size):
    r"""
    Yields one representative of every isomorphism class of co-trees with at most
    :python:`max_size` points, by size and then by canonical code.
    Rooted trees are generated on the dual side, rooting every free tree at each of its
    nodes and keeping one tree per canonical form.
    The number of classes of size $k$ is the number of rooted trees with $k$ nodes.

    Args:
        max_size (:python:`int`): Largest size, between :python:`1` and :python:`10`.

    Returns:
        :python:`Iterator[FinitePoset]`: The co-trees.

    Raises:
        :class:`~combx.errors.LimitExceeded`: When :python:`max_size` exceeds :python:`10`.
    """
    if max_size > MAX_ENUMERATION_SIZE:
        raise LimitExceeded(
            f"Co-tree enumeration is limited to {MAX_ENUMERATION_SIZE} points, got {max_size}."
        )
    if max_size < 1:
        raise DomainError(f"max_size must be positive, got {max_size}.")
    yield from_edges(1, [])
    for size in range(2, max_size + 1):
        classes = {}
        for T in nx.nonisomorphic_trees(size):
            for root in T.nodes:
                nested = nx.to_nested_tuple(T, root, canonical_form=True)
                code = _bracket(nested)
                if code not in classes:
                    classes[code] = (T, root)
        for code in sorted(classes):
            T, root = classes[code]
            yield cotree_from_rooted_tree(T, root)


def classify(X):
    r"""
    Classifies a finite poset as a comb, an hcomb, another co-tree, a co-forest with
    several components, or none of these.
    The empty poset is the empty co-forest.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The poset.

    Returns:
        :class:`~combx.data.cotree.StructureClass`: Its class.
    """
    components = X.components()
    if not all(X.subposet(c).is_cotree() for c in components):
        return StructureClass("NotCoForest")
    if len(components) != 1:
        return StructureClass("CoForest")

    code = canonical_code(X)
    size = X.num_points
    if size % 2 == 0 and code == canonical_code(make_comb(size // 2)):
        return StructureClass("Comb", size // 2)
    if size % 2 == 1 and code == canonical_code(make_hcomb(size // 2)):
        return StructureClass("HComb", size // 2)
    return StructureClass("OtherCoTree")


def is_comb_or_hcomb(X):
    return classify(X).tag in ["Comb", "HComb"]
