import pytest

from combx.data.batch import disjoint_union
from combx.data.cotree import enumerate_cotrees, is_comb_or_hcomb, make_comb, make_hcomb
from combx.data.poset import antichain, chain
from combx.decide.structure import branching_bound_check, frame_F, validates_lfc
from combx.errors import DomainError, NotCoTree
from combx.logic.morphism import embedding_exists, surjection_exists


def test_frames():
    assert [frame_F(i).num_points for i in range(4)] == [5, 3, 5, 4]
    assert frame_F(1).is_chain()
    F3 = frame_F(3)
    assert F3.label_set(F3.immediate_predecessors(F3.index("a"))) == ["b", "c", "d"]
    F2 = frame_F(2)
    assert F2.label_set(F2.immediate_predecessors(F2.index("a"))) == ["b", "a'"]
    assert F2.is_chain(F2.full & ~(1 << F2.index("a'")))
    assert all(frame_F(i).is_cotree() for i in range(4))
    with pytest.raises(DomainError):
        frame_F(4)


@pytest.mark.parametrize("n", range(1, 7))
def test_combs_validate_the_axioms(n):
    C = make_comb(n)
    assert embedding_exists(frame_F(0), C) is None
    for i in [1, 2, 3]:
        assert surjection_exists(C, frame_F(i)) is None


@pytest.mark.parametrize("n", range(1, 7))
def test_validates_lfc_on_combs(n):
    report = validates_lfc(make_comb(n))
    assert report.verdict and report.is_coforest
    assert report.witness is None


@pytest.mark.parametrize("n", range(0, 7))
def test_validates_lfc_on_hcombs(n):
    assert validates_lfc(make_hcomb(n)).verdict


def test_validates_lfc_failures(diamond):
    report = validates_lfc(frame_F(3))
    assert not report.verdict
    assert report.f3_image
    assert report.witness.kind == "SurjectiveBiPMorphism"
    assert report.witness.target == frame_F(3)

    report = validates_lfc(frame_F(0))
    assert report.f0_embeds
    assert report.witness.kind == "OrderEmbedding"
    assert report.to_dict()["witness"]["kind"] == "order_embedding"

    report = validates_lfc(diamond)
    assert not report.is_coforest and not report.verdict

    assert validates_lfc(chain(3)).f1_image
    assert validates_lfc(frame_F(2)).f2_image


def test_validates_lfc_on_coforests():
    assert validates_lfc(disjoint_union([make_comb(2), make_hcomb(1)])).verdict
    assert validates_lfc(antichain(3)).verdict
    report = validates_lfc(disjoint_union([make_comb(2), frame_F(1)]))
    assert report.is_coforest and report.f1_image and not report.verdict


def _classification(max_size):
    for X in enumerate_cotrees(max_size):
        assert validates_lfc(X).verdict == is_comb_or_hcomb(X), X


def test_classification():
    _classification(6)


@pytest.mark.exhaustive
def test_classification_exhaustive():
    _classification(7)


def test_branching_bound_check():
    assert branching_bound_check(make_comb(4))
    assert not branching_bound_check(frame_F(3))
    assert branching_bound_check(chain(1))
    with pytest.raises(NotCoTree):
        branching_bound_check(antichain(2))


def test_cotrees_without_f3_image_branch_at_most_twice():
    F3 = frame_F(3)
    checked = 0
    for X in enumerate_cotrees(7):
        if surjection_exists(X, F3) is None:
            assert branching_bound_check(X)
            checked += 1
    assert checked > 0
