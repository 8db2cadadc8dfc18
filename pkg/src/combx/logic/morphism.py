import logging
from dataclasses import dataclass
from typing import Tuple

from combx.data.bits import iter_bits, popcount
from combx.data.configs import resolve_configs
from combx.data.poset import FinitePoset
from combx.errors import DomainError, NotCoTree, SearchBudgetExceeded

log = logging.getLogger(__name__)

WITNESS_KINDS = {
    "BiPMorphism": "bipmorphism",
    "SurjectiveBiPMorphism": "surjective_bipmorphism",
    "OrderEmbedding": "order_embedding",
}


@dataclass(frozen=True)
class MorphismWitness:
    r"""
    A point map between two finite posets, certified as a bi-p-morphism,
    a surjective bi-p-morphism, or an order embedding.

    Args:
        source (:class:`~combx.data.poset.FinitePoset`): The domain.
        target (:class:`~combx.data.poset.FinitePoset`): The codomain.
        map (:python:`Tuple[int, ...]`): The image of every source point, by index.
        kind (:python:`str`): One of :python:`"BiPMorphism"`, :python:`"SurjectiveBiPMorphism"`
            and :python:`"OrderEmbedding"`.
    """

    source: FinitePoset
    target: FinitePoset
    map: Tuple[int, ...]
    kind: str

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise DomainError(f"Invalid witness kind: {self.kind}.")

    def verify(self):
        """
        Re-checks the defining conditions of :python:`kind`.
        """
        match self.kind:
            case "BiPMorphism":
                return is_bipmorphism(self.source, self.target, self.map)
            case "SurjectiveBiPMorphism":
                return is_bipmorphism(self.source, self.target, self.map) and set(self.map) == set(
                    self.target.points
                )
            case "OrderEmbedding":
                return is_embedding(self.source, self.target, self.map)

    def to_dict(self):
        return {
            "kind": WITNESS_KINDS[self.kind],
            "map": {
                self.source.labels[x]: self.target.labels[y] for x, y in enumerate(self.map)
            },
        }


def _as_tuple(X, Y, f):
    if isinstance(f, dict):
        f = [f[x] for x in X.points]
    f = tuple(int(y) for y in f)
    if len(f) != X.num_points or any(not 0 <= y < Y.num_points for y in f):
        raise DomainError(f"A map from {X.num_points} points into {Y.num_points} points expected.")
    return f


def image(f, mask):
    result = 0
    for x in iter_bits(mask):
        result |= 1 << f[x]
    return result


def is_bipmorphism(X, Y, f):
    r"""
    Checks the three conditions of a bi-p-morphism $f\colon X \to Y$ at every point $x$:

    - order preservation, $x \leq z \Rightarrow f(x) \leq f(z)$;
    - Up, every $y \geq f(x)$ is $f(z)$ for some $z \geq x$;
    - Down, every $y \leq f(x)$ is $f(z)$ for some $z \leq x$.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The domain.
        Y (:class:`~combx.data.poset.FinitePoset`): The codomain.
        f (:python:`Sequence[int]` or :python:`Dict[int, int]`): The point map, by index.

    Returns:
        :python:`bool`: Whether :python:`f` is a bi-p-morphism.
    """
    f = _as_tuple(X, Y, f)
    for x in X.points:
        up_image = image(f, X.up_masks[x])
        down_image = image(f, X.down_masks[x])
        # with order preservation, Up and Down say the images are exactly the principal sets
        if up_image != Y.up_masks[f[x]] or down_image != Y.down_masks[f[x]]:
            return False
    return True


def is_embedding(Y, X, f):
    r"""
    Checks that $f\colon Y \to X$ is an order embedding: $y \leq y' \iff f(y) \leq f(y')$.
    Such a map is automatically injective.
    """
    f = _as_tuple(Y, X, f)
    return all(Y.le(a, b) == X.le(f[a], f[b]) for a in Y.points for b in Y.points)


class _Budget:
    def __init__(self, limit, what):
        self.limit = limit
        self.what = what
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise SearchBudgetExceeded(
                f"The {self.what} search visited more than {self.limit} nodes (node_budget)."
            )


def _top_down(X):
    return sorted(X.points, key=lambda x: (X.height(x), x))


def surjection_exists(X, Y, configs=None):
    r"""
    Searches for a surjective bi-p-morphism $X \twoheadrightarrow Y$ by backtracking over the points
    of $X$ from the top down, so that every point is assigned after all points above it.

    Pruning:

    - $|X| \geq |Y|$, and enough unassigned points must remain to hit every unhit target;
    - maximal points go to maximal points and minimal points to minimal points;
    - for every cover $x \prec z$, $f(x) \leq f(z)$, and when $X$ is a co-tree $f(x) = f(z)$ or $f(x) \prec f(z)$;
    - the Up condition at $x$ is final once $x$ is assigned, and the Down condition at $x$
      once all of $\downarrow x$ is.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The domain.
        Y (:class:`~combx.data.poset.FinitePoset`): The codomain.
        configs (:class:`~combx.data.configs.SearchConfigs`, *optional*):
            Search configurations; :python:`node_budget` bounds the search (default: :python:`None`).

    Returns:
        :python:`Optional[MorphismWitness]`: A witness of kind :python:`"SurjectiveBiPMorphism"`, or :python:`None`.

    Raises:
        :class:`~combx.errors.SearchBudgetExceeded`: When the search exceeds :python:`node_budget`.
    """
    configs = resolve_configs(configs)
    if X.num_points < Y.num_points or (Y.num_points == 0) != (X.num_points == 0):
        return None

    order = _top_down(X)
    position = {x: k for k, x in enumerate(order)}
    # points whose downset is complete once order[k] is assigned
    completes = [[] for _ in order]
    for x in X.points:
        completes[max(position[z] for z in iter_bits(X.down_masks[x]))].append(x)

    cotree = X.is_cotree()
    max_Y, min_Y = Y.maximal(), Y.minimal()
    budget = _Budget(configs.node_budget, "surjection")
    f = [None] * X.num_points

    def candidates(x):
        successors = list(iter_bits(X.immediate_successors(x)))
        if not successors:
            allowed = max_Y
        elif cotree:
            parent = f[successors[0]]
            allowed = (1 << parent) | Y.immediate_predecessors(parent)
        else:
            allowed = Y.full
            for z in successors:
                allowed &= Y.down_masks[f[z]]
        if X.downc(1 << x) == 0:
            allowed &= min_Y
        return allowed

    def consistent(k, x):
        if image(f, X.up_masks[x]) != Y.up_masks[f[x]]:
            return False
        return all(image(f, X.down_masks[z]) == Y.down_masks[f[z]] for z in completes[k])

    def extend(k, hit):
        budget.tick()
        if k == len(order):
            return hit == Y.full
        if popcount(Y.full & ~hit) > len(order) - k:
            return False
        x = order[k]
        for y in iter_bits(candidates(x)):
            f[x] = y
            if consistent(k, x) and extend(k + 1, hit | 1 << y):
                return True
        f[x] = None
        return False

    if extend(0, 0):
        log.debug(f"Surjection found after {budget.nodes} nodes.")
        return MorphismWitness(X, Y, tuple(f), "SurjectiveBiPMorphism")
    log.debug(f"No surjection after {budget.nodes} nodes.")
    return None


def embedding_exists(Y, X, configs=None):
    r"""
    Searches for an order embedding $Y \hookrightarrow X$ by backtracking over the points of $Y$
    from the top down; each new image must be unused and must relate to every earlier image exactly
    as the corresponding points of $Y$ relate.

    Args:
        Y (:class:`~combx.data.poset.FinitePoset`): The poset to embed.
        X (:class:`~combx.data.poset.FinitePoset`): The host poset.
        configs (:class:`~combx.data.configs.SearchConfigs`, *optional*): Search configurations (default: :python:`None`).

    Returns:
        :python:`Optional[MorphismWitness]`: A witness of kind :python:`"OrderEmbedding"`, or :python:`None`.

    Raises:
        :class:`~combx.errors.SearchBudgetExceeded`: When the search exceeds :python:`node_budget`.
    """
    configs = resolve_configs(configs)
    if Y.num_points > X.num_points:
        return None

    order = _top_down(Y)
    budget = _Budget(configs.node_budget, "embedding")
    f = [None] * Y.num_points

    def fits(k, y, x):
        for z in order[:k]:
            if Y.le(y, z) != X.le(x, f[z]) or Y.le(z, y) != X.le(f[z], x):
                return False
        return True

    def extend(k, used):
        budget.tick()
        if k == len(order):
            return True
        y = order[k]
        for x in iter_bits(X.full & ~used):
            if fits(k, y, x):
                f[y] = x
                if extend(k + 1, used | 1 << x):
                    return True
        f[y] = None
        return False

    if extend(0, 0):
        return MorphismWitness(Y, X, tuple(f), "OrderEmbedding")
    return None


def refutes_jankov(X, Y, configs=None):
    r"""
    Returns whether $X$ refutes the Jankov formula of $Y$, i.e., whether a surjective bi-p-morphism
    $X \twoheadrightarrow Y$ exists. This characterization holds for finite co-trees $Y$;
    other targets go through :python:`invalid_op`.
    """
    configs = resolve_configs(configs)
    if not Y.is_cotree():
        configs.raise_warning(f"Jankov refutation against a non-co-tree target {Y}.", NotCoTree)
    return surjection_exists(X, Y, configs) is not None


def refutes_subframe(X, Y, configs=None):
    r"""
    Returns whether $X$ refutes the subframe formula of $Y$, i.e., whether $Y$ order embeds into $X$.
    This characterization holds for finite co-trees $Y$; other targets go through :python:`invalid_op`.
    """
    configs = resolve_configs(configs)
    if not Y.is_cotree():
        configs.raise_warning(f"Subframe refutation against a non-co-tree target {Y}.", NotCoTree)
    return embedding_exists(Y, X, configs) is not None
