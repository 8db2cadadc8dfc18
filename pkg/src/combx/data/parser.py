from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from combx.data.formula import BOT, TOP, And, Coimp, Imp, Or, Var, co_negation, negation
from combx.errors import AmbiguityError, FormulaSyntaxError

# Precedence is enforced by the rule hierarchy (iexp -> oexp -> aexp -> uexp -> atom).
# Arrows are right-associative; the transformer rejects unparenthesized mixing.
FORMULA_GRAMMAR = r"""
    ?start: iexp

    ?iexp: oexp
         | oexp IMP iexp                 -> arrow
         | oexp COIMP iexp               -> arrow

    ?oexp: aexp
         | oexp "|" aexp                 -> disj

    ?aexp: uexp
         | aexp "&" uexp                 -> conj

    ?uexp: atom
         | "!" uexp                      -> neg
         | "~" uexp                      -> coneg

    ?atom: NAME                          -> variable
         | "true"                        -> top
         | "false"                       -> bot
         | "(" iexp ")"                  -> paren

    IMP: "->"
    COIMP: "<-"
    NAME: /[a-zA-Z][a-zA-Z0-9_]*/

    %import common.WS
    %ignore WS
"""


class _Arrow:
    # An unparenthesized arrow chain, remembered until a parenthesis or the root closes it.
    __slots__ = ("formula", "op")

    def __init__(self, formula, op):
        self.formula = formula
        self.op = op


def _close(node):
    return node.formula if isinstance(node, _Arrow) else node


class _Ambiguous(Exception):
    def __init__(self, pos):
        self.pos = pos


@v_args(inline=True)
class FormulaBuilder(Transformer):
    def variable(self, token):
        return Var(str(token))

    def top(self):
        return TOP

    def bot(self):
        return BOT

    def paren(self, node):
        return _close(node)

    def neg(self, node):
        return negation(_close(node))

    def coneg(self, node):
        return co_negation(_close(node))

    def conj(self, left, right):
        return And(_close(left), _close(right))

    def disj(self, left, right):
        return Or(_close(left), _close(right))

    def arrow(self, left, op, right):
        if isinstance(right, _Arrow) and right.op != op.value:
            raise _Ambiguous(op.start_pos)
        constructor = Imp if op.type == "IMP" else Coimp
        return _Arrow(constructor(_close(left), _close(right)), op.value)


_PARSER = Lark(FORMULA_GRAMMAR, parser="lalr")


def _byte_offset(text, pos):
    return len(text[:pos].encode("utf-8"))


def parse(text):
    r"""
    Parses a formula written in the concrete syntax

    .. code-block:: text

        formula := iexp
        iexp    := oexp (("->" | "<-") iexp)?
        oexp    := aexp ("|" aexp)*
        aexp    := uexp ("&" uexp)*
        uexp    := ("!" | "~")* atom
        atom    := ident | "true" | "false" | "(" formula ")"

    where :python:`!p` stands for :python:`p -> false` and :python:`~p` for :python:`true <- p`.

    Args:
        text (:python:`str`): The formula text.

    Returns:
        :class:`~combx.data.formula.Formula`: The parsed formula.

    Raises:
        :class:`~combx.errors.FormulaSyntaxError`: On malformed input.
        :class:`~combx.errors.AmbiguityError`: When :python:`->` and :python:`<-` are mixed without parentheses.
    """
    if not isinstance(text, str):
        raise TypeError(f"Formula text must be a string, got {type(text)}.")
    try:
        tree = _PARSER.parse(text)
        return _close(FormulaBuilder().transform(tree))
    except VisitError as e:
        if isinstance(e.orig_exc, _Ambiguous):
            raise AmbiguityError(
                "'->' and '<-' mixed without parentheses",
                text,
                _byte_offset(text, e.orig_exc.pos),
            ) from None
        raise
    except UnexpectedEOF:
        raise FormulaSyntaxError(
            "unexpected end of input", text, _byte_offset(text, len(text))
        ) from None
    except UnexpectedCharacters as e:
        raise FormulaSyntaxError(
            f"unexpected character {text[e.pos_in_stream]!r}",
            text,
            _byte_offset(text, e.pos_in_stream),
        ) from None
    except UnexpectedInput as e:
        token = getattr(e, "token", None)
        pos = getattr(e, "pos_in_stream", None)
        if token is None or token.type == "$END" or pos is None or pos < 0:
            detail, pos = "unexpected end of input", len(text)
        else:
            detail = f"unexpected token {str(token)!r}"
        raise FormulaSyntaxError(detail, text, _byte_offset(text, pos)) from None
