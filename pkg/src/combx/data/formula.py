import re
from dataclasses import dataclass
from typing import FrozenSet

from combx.errors import DomainError

VARIABLE_PATTERN = r"[a-zA-Z][a-zA-Z0-9_]*"
KEYWORDS = ["true", "false"]


class Formula:
    r"""
    Base class of the bi-intuitionistic formula AST.
    The tree is built from exactly seven constructors:
    :class:`Var`, :class:`Bot`, :class:`Top`, :class:`And`, :class:`Or`,
    :class:`Imp` (:math:`\to`) and :class:`Coimp` (:math:`\leftarrow`).
    The derived connectives are sugar only,
    $\neg\varphi = \varphi\to\bot$ and $\sim\varphi = \top\leftarrow\varphi$.

    Formulas are immutable and hashable; equality is structural.
    """

    __slots__ = ()

    def __str__(self):
        return formula_to_str(self)

    @property
    def children(self):
        return ()


@dataclass(frozen=True, repr=False)
class Var(Formula):
    name: str

    def __post_init__(self):
        valid = isinstance(self.name, str) and re.fullmatch(VARIABLE_PATTERN, self.name)
        if not valid or self.name in KEYWORDS:
            raise DomainError(f"Invalid variable name: {self.name!r}.")

    def __repr__(self):
        return f"Var({self.name!r})"


@dataclass(frozen=True, repr=False)
class Bot(Formula):
    def __repr__(self):
        return "Bot()"


@dataclass(frozen=True, repr=False)
class Top(Formula):
    def __repr__(self):
        return "Top()"


@dataclass(frozen=True, repr=False)
class _Binary(Formula):
    left: Formula
    right: Formula

    @property
    def children(self):
        return (self.left, self.right)

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Imp(_Binary):
    pass


class Coimp(_Binary):
    pass


BOT, TOP = Bot(), Top()


def negation(f):
    r"""
    Returns $\neg f = f \to \bot$.
    """
    return Imp(f, BOT)


def co_negation(f):
    r"""
    Returns $\sim f = \top \leftarrow f$.
    """
    return Coimp(TOP, f)


@dataclass(frozen=True)
class SubformulaSets:
    r"""
    Subformulas of a formula $\varphi$, collected up to structural equality.

    Args:
        all (:python:`FrozenSet[Formula]`): Every subformula, $\varphi$ included.
        imps (:python:`FrozenSet[Formula]`): Subformulas whose main connective is $\to$.
        coimps (:python:`FrozenSet[Formula]`): Subformulas whose main connective is $\leftarrow$.
    """

    all: FrozenSet[Formula]
    imps: FrozenSet[Formula]
    coimps: FrozenSet[Formula]


def subformulas(f):
    r"""
    Collects the subformulas of :python:`f`.

    Args:
        f (:class:`~combx.data.formula.Formula`): The formula.

    Returns:
        :class:`~combx.data.formula.SubformulaSets`: All, implicative and co-implicative subformulas.
    """
    found = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g in found:
            continue
        found.add(g)
        stack.extend(g.children)
    imps = frozenset(g for g in found if isinstance(g, Imp))
    coimps = frozenset(g for g in found if isinstance(g, Coimp))
    return SubformulaSets(all=frozenset(found), imps=imps, coimps=coimps)


def ipd(f):
    r"""
    Computes the implicative degree of :python:`f`:
    atoms and constants have degree $0$, $\land$ and $\lor$ take the maximum of their children,
    and $\to$ and $\leftarrow$ add one to that maximum.

    Args:
        f (:class:`~combx.data.formula.Formula`): The formula.

    Returns:
        :python:`int`: The implicative degree.
    """
    match f:
        case Var() | Bot() | Top():
            return 0
        case And(left, right) | Or(left, right):
            return max(ipd(left), ipd(right))
        case Imp(left, right) | Coimp(left, right):
            return max(ipd(left), ipd(right)) + 1
        case _:
            raise TypeError(f"Not a formula: {f!r}")


def variables(f):
    """
    Returns the sorted list of variable names occurring in :python:`f`.
    """
    return sorted(g.name for g in subformulas(f).all if isinstance(g, Var))


def node_count(f):
    """
    Returns the number of constructor occurrences in :python:`f` (its tree size).
    """
    return 1 + sum(node_count(c) for c in f.children)


def depth(f):
    return 1 + max((depth(c) for c in f.children), default=0)


def iter_postorder(f):
    """
    Yields the distinct subformulas of :python:`f`, children before parents.
    """
    seen = set()
    stack = [(f, False)]
    while stack:
        g, expanded = stack.pop()
        if g in seen:
            continue
        if expanded:
            seen.add(g)
            yield g
        else:
            stack.append((g, True))
            for c in reversed(g.children):
                if c not in seen:
                    stack.append((c, False))


# Printing: higher binds tighter.
_PRECEDENCE = {"arrow": 1, "or": 2, "and": 3, "unary": 4, "atom": 5}


def _level(f):
    match f:
        case Imp(_, Bot()) | Coimp(Top(), _):
            return _PRECEDENCE["unary"]
        case Imp() | Coimp():
            return _PRECEDENCE["arrow"]
        case Or():
            return _PRECEDENCE["or"]
        case And():
            return _PRECEDENCE["and"]
        case _:
            return _PRECEDENCE["atom"]


def _wrap(f, needs_parens):
    string = formula_to_str(f)
    return f"({string})" if needs_parens else string


def formula_to_str(f):
    r"""
    Prints :python:`f` in the concrete syntax accepted by :func:`~combx.data.parser.parse`,
    adding only the parentheses the grammar needs and re-introducing the
    :python:`!` / :python:`~` sugar.

    Args:
        f (:class:`~combx.data.formula.Formula`): The formula.

    Returns:
        :python:`str`: Its canonical text.
    """
    match f:
        case Var(name):
            return name
        case Bot():
            return "false"
        case Top():
            return "true"
        case Imp(body, Bot()):
            return "!" + _wrap(body, _level(body) < _PRECEDENCE["unary"])
        case Coimp(Top(), body):
            return "~" + _wrap(body, _level(body) < _PRECEDENCE["unary"])
        case And(left, right) | Or(left, right):
            level = _level(f)
            op = " & " if isinstance(f, And) else " | "
            # left-associative: only a same-level right child needs parentheses
            return (
                _wrap(left, _level(left) < level)
                + op
                + _wrap(right, _level(right) <= level)
            )
        case Imp(left, right) | Coimp(left, right):
            op = " -> " if isinstance(f, Imp) else " <- "
            # right-associative; mixing arrows always needs parentheses
            right_parens = _level(right) < _PRECEDENCE["arrow"] or (
                _level(right) == _PRECEDENCE["arrow"] and type(right) is not type(f)
            )
            return (
                _wrap(left, _level(left) <= _PRECEDENCE["arrow"])
                + op
                + _wrap(right, right_parens)
            )
        case _:
            raise TypeError(f"Not a formula: {f!r}")


_p, _q = Var("p"), Var("q")
PRELINEARITY = Or(Imp(_p, _q), Imp(_q, _p))
BI_LC_AXIOM = negation(And(Coimp(_q, _p), Coimp(_p, _q)))
EXCLUDED_MIDDLE = Or(_p, negation(_p))
