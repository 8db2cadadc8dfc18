import pytest
from utils import brute_force_upsets

from combx.data.configs import SearchConfigs
from combx.data.cotree import enumerate_cotrees, make_comb
from combx.data.formula import BI_LC_AXIOM, EXCLUDED_MIDDLE, PRELINEARITY, TOP, Var
from combx.data.poset import antichain, chain
from combx.errors import LimitExceeded, SearchBudgetExceeded
from combx.logic.semantics import Model, Valuation, forces, forcing_set
from combx.logic.validity import BatchEvaluator, all_upsets, find_countermodel, is_valid
from combx.utils import make_rng, random_formula, random_poset


def test_all_upsets():
    assert all_upsets(chain(2)) == [0b00, 0b10, 0b11]
    assert len(all_upsets(antichain(2))) == 4
    assert len(all_upsets(make_comb(2))) == 7
    assert all_upsets(make_comb(3))[-1] == make_comb(3).full


def test_all_upsets_against_brute_force():
    rng = make_rng(0)
    for _ in range(50):
        X = random_poset(rng, max_points=7)
        assert all_upsets(X) == brute_force_upsets(X)


def test_comb_upset_count():
    for n in range(1, 7):
        assert len(all_upsets(make_comb(n))) == 2 ** (n + 1) - 1


def test_upset_limit():
    with pytest.raises(LimitExceeded):
        all_upsets(antichain(5), SearchConfigs(upset_limit=10))


def test_named_validities(diamond):
    assert is_valid(make_comb(3), PRELINEARITY)
    assert is_valid(chain(2), BI_LC_AXIOM)
    assert not is_valid(make_comb(2), BI_LC_AXIOM)
    assert not is_valid(diamond, PRELINEARITY)


def test_countermodel_on_one_comb():
    countermodel = find_countermodel(make_comb(1), EXCLUDED_MIDDLE)
    assert countermodel.valuation.to_dict() == {"p": ["x1"]}
    assert countermodel.point == make_comb(1).index("x1p")
    assert countermodel.to_dict() == {
        "frame": {"points": ["x1", "x1p"], "covers": [["x1p", "x1"]]},
        "valuation": {"p": ["x1"]},
        "refuting_point": "x1p",
    }
    assert find_countermodel(make_comb(1), TOP) is None


def test_countermodels_refute():
    C2 = make_comb(2)
    valuation, point = find_countermodel(C2, BI_LC_AXIOM)
    assert not forces(Model(valuation), point, BI_LC_AXIOM)
    refuted = C2.full & ~forcing_set(Model(valuation), BI_LC_AXIOM)
    assert point == min(x for x in C2.points if refuted >> x & 1)


def test_bi_goedel_soundness_on_cotrees(diamond):
    for X in enumerate_cotrees(6):
        assert is_valid(X, PRELINEARITY)
    countermodel = find_countermodel(diamond, PRELINEARITY)
    assert countermodel is not None
    assert not forces(Model(countermodel.valuation), countermodel.point, PRELINEARITY)


def test_budget():
    with pytest.raises(SearchBudgetExceeded):
        find_countermodel(make_comb(3), PRELINEARITY, SearchConfigs(budget=10))
    assert is_valid(make_comb(3), PRELINEARITY, SearchConfigs(budget=225))


def test_batch_evaluator_matches_forcing_sets():
    rng = make_rng(1)
    for _ in range(30):
        X = random_poset(rng, max_points=6)
        f = random_formula(rng, variables=("p", "q"), max_depth=5)
        evaluator = BatchEvaluator(X, f, all_upsets(X))
        stop = min(evaluator.num_valuations, 200)
        batch = evaluator.forcing_sets(0, stop)
        for t in range(stop):
            valuation_sets = evaluator.assignment(t)
            expected = forcing_set(Model(Valuation(X, valuation_sets)), f)
            assert int(batch[t]) == expected


def test_valuation_order():
    evaluator = BatchEvaluator(chain(2), PRELINEARITY, all_upsets(chain(2)))
    assert evaluator.names == ["p", "q"]
    assert evaluator.num_valuations == 9
    assert evaluator.assignment(0) == {"p": 0b00, "q": 0b00}
    assert evaluator.assignment(1) == {"p": 0b00, "q": 0b10}
    assert evaluator.assignment(3) == {"p": 0b10, "q": 0b00}
    assert evaluator.assignment(8) == {"p": 0b11, "q": 0b11}


def test_result_independent_of_threads():
    rng = make_rng(2)
    single = SearchConfigs(threads=1, chunk_size=7)
    many = SearchConfigs(threads=4, chunk_size=7)
    for _ in range(30):
        X = random_poset(rng, max_points=5)
        f = random_formula(rng, variables=("p", "q"), max_depth=5)
        assert find_countermodel(X, f, single) == find_countermodel(X, f, many)
        assert find_countermodel(X, f, single) == find_countermodel(X, f)


def test_variable_free_formula():
    assert is_valid(make_comb(2), TOP)
    countermodel = find_countermodel(make_comb(2), Var("p"))
    assert countermodel.valuation.to_dict() == {"p": []}
