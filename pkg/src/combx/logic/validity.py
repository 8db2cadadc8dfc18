import logging
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

import numpy as np

from combx.data.configs import resolve_configs
from combx.data.conversion import frame_to_dict
from combx.data.formula import And, Bot, Coimp, Imp, Or, Top, Var, iter_postorder, variables
from combx.errors import LimitExceeded, SearchBudgetExceeded
from combx.logic.semantics import Model, Valuation, forcing_set

log = logging.getLogger(__name__)

MAX_BATCH_POINTS = 64



def all_upsets(X, configs=None):
    r"""
    Lists every upset of :python:`X` as a mask, in increasing numeric order;
    the first is $\emptyset$ and the last is $X$.
    Points are added top-down, so a point may join a partial upset only after
    every point above it has.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The frame.
        configs (:class:`~combx.data.configs.SearchConfigs`, *optional*):
            Search configurations; :python:`upset_limit` bounds the output (default: :python:`None`).

    Returns:
        :python:`List[int]`: The upsets.

    Raises:
        :class:`~combx.errors.LimitExceeded`: When there are more than :python:`upset_limit` upsets.
    """
    configs = resolve_configs(configs)
    upsets = [0]
    for x in sorted(X.points, key=X.height):
        above = X.upc(1 << x)
        upsets += [m | 1 << x for m in upsets if m & above == above]
        if len(upsets) > configs.upset_limit:
            raise LimitExceeded(
                f"{X} has more than {configs.upset_limit} upsets (upset_limit)."
            )
    return sorted(upsets)


class Countermodel(NamedTuple):
    """
    A valuation together with a point that does not force the formula.
    """

    valuation: Valuation
    point: int

    def to_dict(self):
        frame = self.valuation.frame
        return {
            "frame": frame_to_dict(frame),
            "valuation": self.valuation.to_dict(),
            "refuting_point": frame.labels[self.point],
        }


class BatchEvaluator:
    r"""
    Evaluates one formula under many valuations at once.
    Valuation number $t$ assigns to the $j$-th variable (in sorted order) the upset whose position
    is the $j$-th base-$|\mathrm{Up}(X)|$ digit of $t$, most significant first;
    forcing sets of a whole range of $t$ are computed as :python:`np.uint64` point masks.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The frame, with at most 64 points.
        f (:class:`~combx.data.formula.Formula`): The formula.
        upsets (:python:`List[int]`): The upsets of :python:`X`, see :func:`all_upsets`.
    """

    def __init__(self, X, f, upsets):
        if X.num_points > MAX_BATCH_POINTS:
            raise LimitExceeded(
                f"Batched evaluation supports up to {MAX_BATCH_POINTS} points, got {X.num_points}."
            )
        self.frame = X
        self.formula = f
        self.upsets = upsets
        self.names = variables(f)
        self.num_valuations = len(upsets) ** len(self.names)

        self.table = np.array(upsets, dtype=np.uint64)
        self.full = np.uint64(X.full)
        self.up_masks = np.array(X.up_masks, dtype=np.uint64)
        self.down_masks = np.array(X.down_masks, dtype=np.uint64)
        self.nodes = list(iter_postorder(f))

    def assignment(self, t):
        """
        Decodes valuation number :python:`t` into a variable-to-upset map.
        """
        assignment, radix = {}, len(self.upsets)
        for name in reversed(self.names):
            t, digit = divmod(t, radix)
            assignment[name] = self.upsets[digit]
        return assignment

    def _saturate(self, masks, principal):
        result = np.zeros_like(masks)
        for i in range(self.frame.num_points):
            hit = (masks >> np.uint64(i)) & np.uint64(1)
            result |= hit * principal[i]
        return result

    def forcing_sets(self, start, stop):
        index = np.arange(start, stop, dtype=np.int64)
        radix = len(self.upsets)
        values = {}
        for name in reversed(self.names):
            values[Var(name)] = self.table[index % radix]
            index = index // radix

        size = stop - start
        for g in self.nodes:
            match g:
                case Var():
                    continue
                case Bot():
                    values[g] = np.zeros(size, dtype=np.uint64)
                case Top():
                    values[g] = np.full(size, self.full, dtype=np.uint64)
                case And(left, right):
                    values[g] = values[left] & values[right]
                case Or(left, right):
                    values[g] = values[left] | values[right]
                case Imp(left, right):
                    diff = values[left] & ~values[right]
                    values[g] = self.full & ~self._saturate(diff, self.down_masks)
                case Coimp(left, right):
                    diff = values[left] & ~values[right]
                    values[g] = self._saturate(diff, self.up_masks)
        return values[self.formula]

    def first_refutation(self, start, stop):
        """
        Returns the least valuation number in :python:`[start, stop)` that does not force
        :python:`f` everywhere, or :python:`None`.
        """
        bad = np.flatnonzero(self.forcing_sets(start, stop) != self.full)
        return start + int(bad[0]) if bad.size else None


def _search(evaluator, chunk_size, threads):
    total = evaluator.num_valuations
    starts = range(0, total, chunk_size)

    def run(start):
        return evaluator.first_refutation(start, min(start + chunk_size, total))

    if threads == 1:
        for start in starts:
            found = run(start)
            if found is not None:
                return found
        return None

    # Waves of one chunk per worker; the first hit in chunk order wins.
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for offset in range(0, len(starts), threads):
            for found in pool.map(run, starts[offset : offset + threads]):
                if found is not None:
                    return found
    return None


def find_countermodel(X, f, configs=None):
    r"""
    Searches every assignment of upsets of :python:`X` to the variables of :python:`f`
    for one that refutes :python:`f` somewhere.
    The returned countermodel is the first refuting valuation in the deterministic
    order of :class:`BatchEvaluator`, and its point is the least refuting point;
    neither depends on the number of threads.

    Args:
        X (:class:`~combx.data.poset.FinitePoset`): The frame.
        f (:class:`~combx.data.formula.Formula`): The formula.
        configs (:class:`~combx.data.configs.SearchConfigs`, *optional*): Search configurations (default: :python:`None`).

    Returns:
        :python:`Optional[Countermodel]`: A countermodel, or :python:`None` when :python:`f` is valid on :python:`X`.

    Raises:
        :class:`~combx.errors.SearchBudgetExceeded`: When $|\mathrm{Up}(X)|^k$ exceeds :python:`budget`.
        :class:`~combx.errors.LimitExceeded`: When the upsets cannot be materialised.
    """
    configs = resolve_configs(configs)
    upsets = all_upsets(X, configs)
    evaluator = BatchEvaluator(X, f, upsets)
    total = evaluator.num_valuations
    if total > configs.budget:
        raise SearchBudgetExceeded(
            f"Validity on {X.num_points} points needs {len(upsets)}^{len(evaluator.names)} = {total} "
            f"evaluations, over the budget of {configs.budget}."
        )
    log.debug(f"Checking {f} on {X.num_points} points over {total} valuations.")

    found = _search(evaluator, configs.chunk_size, configs.threads)
    if found is None:
        return None
    valuation = Valuation(X, evaluator.assignment(found))
    refuted = X.full & ~forcing_set(Model(valuation), f)
    point = (refuted & -refuted).bit_length() - 1
    return Countermodel(valuation, point)


def is_valid(X, f, configs=None):
    r"""
    Returns whether $V(f) = X$ for every valuation on :python:`X`; see :func:`find_countermodel`.
    """
    return find_countermodel(X, f, configs) is None
