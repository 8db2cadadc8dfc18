import pytest

from combx.data.formula import BOT, PRELINEARITY, TOP, And, Coimp, Imp, Or, Var
from combx.data.parser import parse
from combx.errors import AmbiguityError, FormulaSyntaxError
from combx.utils import make_rng, random_formula

p, q, r = Var("p"), Var("q"), Var("r")


@pytest.mark.parametrize(
    "text, f",
    [
        ("(p -> q) | (q -> p)", PRELINEARITY),
        ("~p", Coimp(TOP, p)),
        ("!p", Imp(p, BOT)),
        ("p -> q -> r", Imp(p, Imp(q, r))),
        ("p <- q <- r", Coimp(p, Coimp(q, r))),
        ("p & q | r", Or(And(p, q), r)),
        ("p | q & r", Or(p, And(q, r))),
        ("p & q & r", And(And(p, q), r)),
        ("p | q -> r", Imp(Or(p, q), r)),
        ("(p -> q) <- r", Coimp(Imp(p, q), r)),
        ("p -> (q <- r)", Imp(p, Coimp(q, r))),
        ("!( (q<-p) & (p<-q) )", Imp(And(Coimp(q, p), Coimp(p, q)), BOT)),
        ("~~p", Coimp(TOP, Coimp(TOP, p))),
        ("true & false", And(TOP, BOT)),
        ("  x_1  ->y2 ", Imp(Var("x_1"), Var("y2"))),
    ],
)
def test_parse(text, f):
    assert parse(text) == f


def test_mixed_arrows_are_ambiguous():
    with pytest.raises(AmbiguityError) as e:
        parse("p -> q <- r")
    assert e.value.offset == 2
    with pytest.raises(AmbiguityError):
        parse("p <- q -> r")


@pytest.mark.parametrize("text, offset", [("p &", 3), ("p $ q", 2), ("(p", 2), ("", 0)])
def test_syntax_error_offset(text, offset):
    with pytest.raises(FormulaSyntaxError) as e:
        parse(text)
    assert e.value.offset == offset
    assert isinstance(e.value, SyntaxError)


def test_non_string_input():
    with pytest.raises(TypeError):
        parse(None)


def test_print_parse_round_trip():
    rng = make_rng(0)
    for _ in range(300):
        f = random_formula(rng, max_depth=6)
        assert parse(str(f)) == f
