import logging
from dataclasses import dataclass
from typing import Optional

from combx.data.bits import popcount
from combx.data.configs import resolve_configs
from combx.data.poset import from_edges
from combx.errors import DomainError, NotCoTree
from combx.logic.morphism import MorphismWitness, embedding_exists, surjection_exists

log = logging.getLogger(__name__)


def frame_F(i):
    r"""
    Returns one of the four fixed co-trees whose refutation patterns axiomatize the logic of the finite combs.

    - $F_0$: $a$ over two 2-chains, $d < b < a$ and $e < c < a$ (5 points);
    - $F_1$: the 3-chain $c < b < a$;
    - $F_2$: the 4-chain $d < c < b < a$ with a second minimal point $a' \prec a$ (5 points);
    - $F_3$: $a$ over the 3-antichain $\{b, c, d\}$ (4 points).

    Args:
        i (:python:`int`): Index :python:`0`, :python:`1`, :python:`2` or :python:`3`.

    Returns:
        :class:`~combx.data.poset.FinitePoset`: The frame, with points labelled as above.
    """
    match i:
        case 0:
            return from_edges(5, [(1, 0), (2, 0), (3, 1), (4, 2)], ["a", "b", "c", "d", "e"])
        case 1:
            return from_edges(3, [(1, 0), (2, 1)], ["a", "b", "c"])
        case 2:
            return from_edges(5, [(1, 0), (2, 1), (3, 2), (4, 0)], ["a", "b", "c", "d", "a'"])
        case 3:
            return from_edges(4, [(1, 0), (2, 0), (3, 0)], ["a", "b", "c", "d"])
        case _:
            raise DomainError(f"There are only the frames F0 to F3, got index {i}.")


@dataclass
class LfcReport:
    r"""
    Outcome of the structural test of :func:`validates_lfc`.

    Args:
        is_coforest (:python:`bool`): Whether the frame is a co-forest.
        f0_embeds (:python:`bool`): Whether $F_0$ order embeds into the frame.
        f1_image (:python:`bool`): Whether some component maps onto $F_1$.
        f2_image (:python:`bool`): Whether some component maps onto $F_2$.
        f3_image (:python:`bool`): Whether some component maps onto $F_3$.
        verdict (:python:`bool`): Whether the frame validates the axioms.
        witness (:python:`Optional[MorphismWitness]`): The first violating map, if any.
    """

    is_coforest: bool
    f0_embeds: bool
    f1_image: bool
    f2_image: bool
    f3_image: bool
    verdict: bool
    witness: Optional[MorphismWitness] = None

    def to_dict(self):
        return {
            "is_coforest": self.is_coforest,
            "f0_embeds": self.f0_embeds,
            "f1_image": self.f1_image,
            "f2_image": self.f2_image,
            "f3_image": self.f3_image,
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def validates_lfc(X, configs=None):
    r"""
    Decides structurally whether a finite poset validates the logic of the finite combs:
    $X$ must be a co-forest, $F_0$ must not order embed into $X$, and no component of $X$ may map
    onto $F_1$, $F_2$ or $F_3$ by a surjective bi-p-morphism.
    Every flag is computed even after a failure; the witness is the first violating map
    in the order $F_0, F_1, F_2, F_3$ and component order.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The frame.
        configs (:class:`~combx.data.configs.SearchConfigs`, *optional*): Search configurations (default: :python:`None`).

    Returns:
        :class:`~combx.decide.structure.LfcReport`: The report.
    """
    configs = resolve_configs(configs)
    is_coforest = X.is_coforest()

    witnesses = []
    embedding = embedding_exists(frame_F(0), X, configs)
    witnesses.append(embedding)

    components = [X.subposet(c) for c in X.components()]
    images = []
    for i in [1, 2, 3]:
        target = frame_F(i)
        found = None
        for component in components:
            found = surjection_exists(component, target, configs)
            if found is not None:
                break
        images.append(found is not None)
        witnesses.append(found)

    verdict = is_coforest and embedding is None and not any(images)
    witness = next((w for w in witnesses if w is not None), None)
    log.debug(f"LFC check on {X.num_points} points: verdict {verdict}.")
    return LfcReport(
        is_coforest=is_coforest,
        f0_embeds=embedding is not None,
        f1_image=images[0],
        f2_image=images[1],
        f3_image=images[2],
        verdict=verdict,
        witness=witness,
    )


def branching_bound_check(X):
    """
    Returns whether every point of the co-tree :python:`X` has at most two immediate predecessors.

    Raises:
        :class:`~combx.errors.NotCoTree`: When :python:`X` is not a co-tree.
    """
    if not X.is_cotree():
        raise NotCoTree(f"{X} is not a co-tree.")
    return all(popcount(X.immediate_predecessors(x)) <= 2 for x in X.points)
