import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from combx.data.configs import resolve_configs
from combx.data.cotree import make_comb
from combx.data.formula import Formula, subformulas
from combx.data.poset import from_edges
from combx.errors import LimitExceeded, SearchBudgetExceeded
from combx.logic.semantics import Model, Valuation, forces
from combx.logic.validity import find_countermodel, is_valid

log = logging.getLogger(__name__)


def comb_bound(f):
    r"""
    Returns the comb size up to which :func:`in_logfc` checks :python:`f`:

    .. math::
        B(f) = |S_\leftarrow(f)| + |S_\to(f)| + 2,

    one spine pair per implicative or co-implicative subformula, one for the refuting point,
    and one spare.
    """
    sets = subformulas(f)
    return len(sets.coimps) + len(sets.imps) + 2


@dataclass(frozen=True)
class RefutingComb:
    r"""
    A certificate that $C_n$ refutes a formula: a valuation on :python:`make_comb(n)` and a point
    that does not force the formula.
    """

    n: int
    valuation: Valuation
    point: int

    def verify(self, f):
        """
        Re-checks the refutation through the forcing relation.
        """
        return not forces(Model(self.valuation), self.point, f)

    def to_dict(self):
        frame = self.valuation.frame
        return {
            "comb": self.n,
            "valuation": self.valuation.to_dict(),
            "point": frame.labels[self.point],
        }


@dataclass(frozen=True)
class ExhaustedUpTo:
    r"""
    A record that every comb $C_1, \cdots, C_n$ validates a formula.
    """

    n: int

    def to_dict(self):
        return {"exhausted_up_to": self.n}


Certificate = Union[RefutingComb, ExhaustedUpTo]


@dataclass(frozen=True)
class MembershipVerdict:
    """
    Outcome of :func:`in_logfc`.

    Args:
        formula (:class:`~combx.data.formula.Formula`): The formula.
        in_logfc (:python:`bool`): Whether the formula is valid on every finite comb.
        bound_used (:python:`int`): The comb bound that was checked.
        certificate (:python:`RefutingComb` or :python:`ExhaustedUpTo`): The evidence.
    """

    formula: Formula
    in_logfc: bool
    bound_used: int
    certificate: Certificate

    def to_dict(self):
        return {
            "formula": str(self.formula),
            "in_logfc": self.in_logfc,
            "bound": self.bound_used,
            "certificate": self.certificate.to_dict(),
        }


def _refute_on_comb(f, n, configs):
    countermodel = find_countermodel(make_comb(n), f, configs)
    if countermodel is None:
        return None
    return RefutingComb(n, countermodel.valuation, countermodel.point)


def _scan_combs(f, max_n, configs):
    for n in range(1, max_n + 1):
        try:
            found = _refute_on_comb(f, n, configs)
        except (SearchBudgetExceeded, LimitExceeded) as e:
            log.info(f"Budget exhausted on C_{n} while checking {f}; combs up to {n - 1} validate it.")
            raise SearchBudgetExceeded(
                f"Checking {f} on C_{n}: {e}", partial=ExhaustedUpTo(n - 1)
            ) from e
        log.debug(f"C_{n} {'refutes' if found else 'validates'} {f}.")
        if found is not None:
            return found
    return None


def in_logfc(f, configs=None):
    r"""
    Decides whether :python:`f` is valid on every finite comb by checking the combs
    $C_1, C_2, \cdots, C_{B(f)}$ in ascending order (see :func:`comb_bound`).
    Hcombs need no separate check, as each $C_n'$ is a bi-p-morphic image of $C_{n+1}$.

    Args:
        f (:class:`~combx.data.formula.Formula`): The formula.
        configs (:class:`~combx.data.configs.SearchConfigs`, *optional*): Search configurations (default: :python:`None`).

    Returns:
        :class:`~combx.decide.membership.MembershipVerdict`: The verdict; a refutation always
        comes with the least refuting comb.

    Raises:
        :class:`~combx.errors.SearchBudgetExceeded`: When a comb cannot be checked within the budget;
            its :python:`partial` is the :class:`ExhaustedUpTo` record of the combs that were checked.
    """
    configs = resolve_configs(configs)
    bound = comb_bound(f)
    found = _scan_combs(f, bound, configs)
    if found is None:
        verdict = MembershipVerdict(f, True, bound, ExhaustedUpTo(bound))
    else:
        verdict = MembershipVerdict(f, False, bound, found)
    log.info(f"{f}: in_logfc={verdict.in_logfc} (bound {bound}).")
    return verdict


def logfc_semidecide(f, max_n, configs=None):
    r"""
    Checks $C_1, \cdots, C_{max\_n}$ regardless of :func:`comb_bound` and returns the first refutation.

    Returns:
        :python:`Optional[RefutingComb]`: The least refuting comb up to :python:`max_n`, or :python:`None`.
    """
    return _scan_combs(f, max_n, resolve_configs(configs))


@dataclass(frozen=True)
class TabularityVerdict:
    r"""
    Outcome of :func:`locally_tabular`.

    Args:
        axioms (:python:`List[Formula]`): The extra axioms.
        locally_tabular (:python:`bool`): Whether the extension is locally tabular.
        witness (:python:`Optional[Tuple[int, MembershipVerdict]]`): The first axiom outside the logic
            of the finite combs, with its verdict.
        inconsistent (:python:`bool`): Whether some axiom fails on the one-point frame, in which case
            the extension is the inconsistent logic.
    """

    axioms: List[Formula]
    locally_tabular: bool
    witness: Optional[Tuple[int, MembershipVerdict]] = None
    inconsistent: bool = False

    def to_dict(self):
        witness = None
        if self.witness is not None:
            index, verdict = self.witness
            witness = {"axiom": index, **verdict.to_dict()}
        return {
            "axioms": [str(a) for a in self.axioms],
            "locally_tabular": self.locally_tabular,
            "witness": witness,
            "inconsistent": self.inconsistent,
        }


def locally_tabular(axioms, configs=None):
    r"""
    Decides whether the extension of the bi-intuitionistic Gödel-Dummett logic by :python:`axioms` is
    locally tabular. This is the case iff some axiom lies outside the logic of the finite combs, so the
    axioms are checked in order and the first one refuted on a comb decides. With no axioms the
    extension is the base logic itself, which is not locally tabular.

    Args:
        axioms (:python:`List[Formula]`): The extra axioms.
        configs (:class:`~combx.data.configs.SearchConfigs`, *optional*): Search configurations (default: :python:`None`).

    Returns:
        :class:`~combx.decide.membership.TabularityVerdict`: The verdict.
    """
    configs = resolve_configs(configs)
    axioms = list(axioms)
    singleton = from_edges(1, [])
    inconsistent = any(not is_valid(singleton, a, configs) for a in axioms)
    if inconsistent:
        log.info("Some axiom fails on the one-point frame; the extension is inconsistent.")

    for index, axiom in enumerate(axioms):
        verdict = in_logfc(axiom, configs)
        if not verdict.in_logfc:
            return TabularityVerdict(axioms, True, (index, verdict), inconsistent)
    return TabularityVerdict(axioms, False, None, inconsistent)


def bound_is_adequate(f, factor=2, configs=None):
    r"""
    Cross-checks :func:`in_logfc` against :func:`logfc_semidecide` with the larger horizon
    :python:`factor` $\cdot B(f)$. A disagreement means some comb beyond $B(f)$ refutes a formula
    that all combs up to $B(f)$ validate; it is logged as a warning.

    Returns:
        :python:`bool`: Whether both agree.

    Raises:
        :class:`~combx.errors.SearchBudgetExceeded`: When either check runs out of budget.
    """
    configs = resolve_configs(configs)
    verdict = in_logfc(f, configs)
    horizon = factor * verdict.bound_used
    found = logfc_semidecide(f, horizon, configs)
    if verdict.in_logfc == (found is None):
        return True
    log.warning(f"{f} holds on combs up to {verdict.bound_used} but fails on C_{found.n}.")
    return False
