import logging

import pytest

from combx.data.configs import SearchConfigs
from combx.data.cotree import hcomb_collapse_map, make_comb, make_hcomb
from combx.data.formula import BI_LC_AXIOM, BOT, EXCLUDED_MIDDLE, PRELINEARITY, TOP, variables
from combx.data.parser import parse
from combx.decide.membership import (
    ExhaustedUpTo,
    RefutingComb,
    bound_is_adequate,
    comb_bound,
    in_logfc,
    locally_tabular,
    logfc_semidecide,
)
from combx.errors import SearchBudgetExceeded
from combx.logic.morphism import is_bipmorphism
from combx.logic.validity import find_countermodel, is_valid
from combx.utils import make_rng, random_formula, random_formula_by_connectives


@pytest.mark.parametrize(
    "f, bound",
    [(PRELINEARITY, 4), (BOT, 2), (BI_LC_AXIOM, 5), (EXCLUDED_MIDDLE, 3)],
)
def test_comb_bound(f, bound):
    assert comb_bound(f) == bound


def test_prelinearity_is_in_logfc():
    verdict = in_logfc(PRELINEARITY)
    assert verdict.in_logfc
    assert verdict.bound_used == 4
    assert verdict.certificate == ExhaustedUpTo(4)
    assert verdict.to_dict() == {
        "formula": "(p -> q) | (q -> p)",
        "in_logfc": True,
        "bound": 4,
        "certificate": {"exhausted_up_to": 4},
    }


def test_bi_lc_axiom_is_refuted_on_two_comb():
    verdict = in_logfc(BI_LC_AXIOM)
    assert not verdict.in_logfc
    assert isinstance(verdict.certificate, RefutingComb)
    assert verdict.certificate.n == 2
    assert verdict.certificate.verify(BI_LC_AXIOM)
    assert verdict.to_dict()["certificate"]["comb"] == 2


def test_bottom_is_refuted_on_one_comb():
    verdict = in_logfc(BOT)
    assert not verdict.in_logfc
    assert verdict.certificate.n == 1
    assert verdict.certificate.to_dict() == {"comb": 1, "valuation": {}, "point": "x1"}


def test_semidecide():
    assert logfc_semidecide(TOP, 10) is None
    assert logfc_semidecide(BI_LC_AXIOM, 10).n == 2
    found = logfc_semidecide(EXCLUDED_MIDDLE, 10)
    assert found.n == 1
    assert found.valuation.to_dict() == {"p": ["x1"]}
    assert found.verify(EXCLUDED_MIDDLE)


def test_budget_keeps_partial_result():
    with pytest.raises(SearchBudgetExceeded) as e:
        in_logfc(PRELINEARITY, SearchConfigs(budget=100))
    assert e.value.partial == ExhaustedUpTo(2)


def test_locally_tabular():
    verdict = locally_tabular([])
    assert not verdict.locally_tabular and verdict.witness is None
    assert not verdict.inconsistent

    verdict = locally_tabular([PRELINEARITY, EXCLUDED_MIDDLE])
    assert verdict.locally_tabular
    index, membership = verdict.witness
    assert index == 1
    assert membership.certificate.n == 1
    assert membership.certificate.verify(EXCLUDED_MIDDLE)

    verdict = locally_tabular([parse("!( (q<-p) & (p<-q) )")])
    assert verdict.locally_tabular
    assert verdict.to_dict()["witness"]["certificate"]["comb"] == 2
    assert verdict.to_dict()["witness"]["axiom"] == 0

    assert not locally_tabular([PRELINEARITY]).locally_tabular


def test_inconsistent_extension():
    verdict = locally_tabular([BOT])
    assert verdict.locally_tabular and verdict.inconsistent
    assert verdict.to_dict()["inconsistent"]


def test_refutation_is_monotone_in_comb_size():
    rng = make_rng(0)
    for _ in range(40):
        f = random_formula(rng, variables=("p", "q"), max_depth=4)
        for n in range(1, 4):
            if not is_valid(make_comb(n), f):
                assert not is_valid(make_comb(n + 1), f)


def _hcomb_transfer(trials, seed):
    rng = make_rng(seed)
    for _ in range(trials):
        f = random_formula(rng, variables=("p", "q"), max_depth=5)
        for n in range(0, 5):
            if is_valid(make_comb(n + 1), f):
                assert is_valid(make_hcomb(n), f)


def test_hcomb_transfer():
    assert all(is_bipmorphism(make_comb(n + 1), make_hcomb(n), hcomb_collapse_map(n)) for n in range(5))
    _hcomb_transfer(40, seed=1)


@pytest.mark.exhaustive
def test_hcomb_transfer_exhaustive():
    _hcomb_transfer(200, seed=2)


def _bound_adequacy(target, seed, max_variables, max_connectives, budget):
    """
    Compares the bounded check with twice its horizon on random formulas until :python:`target`
    of them fit the budget. Returns the number of valid formulas with at least two variables.
    """
    rng = make_rng(seed)
    names = ("p", "q", "r")[:max_variables]
    configs = SearchConfigs(budget=budget)
    checked, skipped, valid_multi, disagreements = 0, 0, 0, []
    while checked < target:
        assert skipped <= 2 * target, f"{skipped} formulas exceeded the budget"
        f = random_formula_by_connectives(rng, names, max_connectives)
        try:
            verdict = in_logfc(f, configs)
            found = logfc_semidecide(f, 2 * comb_bound(f), configs)
        except SearchBudgetExceeded:
            skipped += 1
            continue
        checked += 1
        if verdict.in_logfc != (found is None):
            disagreements.append(str(f))
        if verdict.in_logfc and len(variables(f)) >= 2:
            valid_multi += 1
    assert disagreements == []
    assert checked == target
    return valid_multi


@pytest.mark.parametrize(
    "f",
    [PRELINEARITY, TOP, parse("p -> p"), parse("(p -> q) | (q -> p) | p"), parse("!(p <- p)")],
)
def test_bound_adequacy_on_valid_formulas(f):
    assert in_logfc(f).in_logfc
    assert logfc_semidecide(f, 2 * comb_bound(f)) is None


def test_bound_adequacy():
    _bound_adequacy(40, seed=3, max_variables=2, max_connectives=4, budget=10**6)


@pytest.mark.exhaustive
def test_bound_adequacy_exhaustive():
    assert _bound_adequacy(500, seed=4, max_variables=3, max_connectives=10, budget=10**8) >= 10


def test_countermodel_certificate_points_into_comb():
    verdict = in_logfc(EXCLUDED_MIDDLE)
    certificate = verdict.certificate
    assert certificate.valuation.frame == make_comb(certificate.n)
    assert certificate.to_dict()["point"] == "x1p"
    assert find_countermodel(make_comb(1), EXCLUDED_MIDDLE).point == certificate.point


def test_bound_is_adequate():
    assert bound_is_adequate(PRELINEARITY)
    assert bound_is_adequate(BI_LC_AXIOM)


def test_bound_disagreement_is_logged(monkeypatch, caplog):
    # BI_LC_AXIOM first fails on C_2
    monkeypatch.setattr("combx.decide.membership.comb_bound", lambda f: 1)
    with caplog.at_level(logging.WARNING, logger="combx.decide.membership"):
        assert not bound_is_adequate(BI_LC_AXIOM)
    assert "fails on C_2" in caplog.text
