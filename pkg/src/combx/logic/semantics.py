from combx.data.bits import iter_bits
from combx.data.formula import And, Bot, Coimp, Imp, Or, Top, Var, iter_postorder
from combx.errors import DomainError, NotUpset, UnassignedVariable


def imp_set(X, U, V):
    r"""
    Returns $U \to V = X \setminus \downarrow(U \setminus V)$ without checking the arguments.
    """
    return X.full & ~X.down(U & ~V)


def coimp_set(X, U, V):
    r"""
    Returns $U \leftarrow V = \uparrow(U \setminus V)$ without checking the arguments.
    """
    return X.up(U & ~V)


class Valuation:
    r"""
    An assignment of upsets of a finite frame to propositional variables.
    Every assigned set must be an upset, which is what makes forcing persistent.

    Args:
        frame (:class:`~combx.data.poset.FinitePoset`): The frame.
        assignment (:python:`Dict[str, int]`): Map from variable names to upset masks.

    Raises:
        :class:`~combx.errors.NotUpset`: When some assigned set is not an upset of :python:`frame`.
    """

    def __init__(self, frame, assignment):
        for name, mask in assignment.items():
            if not isinstance(mask, int) or mask < 0 or mask & ~frame.full:
                raise DomainError(f"V({name}) = {mask!r} is not a point set of the frame.")
            if not frame.is_upset(mask):
                raise NotUpset(f"V({name}) = {frame.label_set(mask)} is not an upset.")
        self.frame = frame
        self.assignment = dict(assignment)

    def __getitem__(self, name):
        try:
            return self.assignment[name]
        except KeyError:
            raise UnassignedVariable(f"Variable {name!r} is not assigned.") from None

    def __eq__(self, other):
        return (
            isinstance(other, Valuation)
            and self.frame == other.frame
            and self.assignment == other.assignment
        )

    def __repr__(self):
        sets = ", ".join(f"{k}={self.frame.label_set(v)}" for k, v in sorted(self.assignment.items()))
        return f"Valuation({sets})"

    def to_dict(self):
        return {k: self.frame.label_set(v) for k, v in sorted(self.assignment.items())}

    @classmethod
    def from_labels(cls, frame, assignment):
        """
        Builds a valuation from lists of point labels, e.g., :python:`{"p": ["x2", "x2p"]}`.
        """
        masks = {}
        for name, labels in assignment.items():
            mask = 0
            for label in labels:
                mask |= 1 << frame.index(str(label))
            masks[name] = mask
        return cls(frame, masks)


class Model:
    r"""
    A finite bi-intuitionistic Kripke model $(X, V)$.
    Forcing sets are memoized per subformula in :python:`cache`.

    Args:
        valuation (:class:`~combx.logic.semantics.Valuation`): The valuation; its frame is the model's frame.
    """

    def __init__(self, valuation):
        self.valuation = valuation
        self.frame = valuation.frame
        self.cache = {}

    def forcing_set(self, f):
        return forcing_set(self, f)

    def forces(self, x, f):
        return forces(self, x, f)


def _step(X, f, value_of, valuation):
    match f:
        case Var(name):
            return valuation[name]
        case Bot():
            return 0
        case Top():
            return X.full
        case And(left, right):
            return value_of[left] & value_of[right]
        case Or(left, right):
            return value_of[left] | value_of[right]
        case Imp(left, right):
            return imp_set(X, value_of[left], value_of[right])
        case Coimp(left, right):
            return coimp_set(X, value_of[left], value_of[right])
        case _:
            raise TypeError(f"Not a formula: {f!r}")


def forcing_set(M, f):
    r"""
    Computes the forcing set $V(f) = \{x : M, x \models f\}$ bottom-up over the subformulas of :python:`f`:

    .. math::
        V(\varphi \to \psi) = X \setminus \downarrow(V(\varphi) \setminus V(\psi)), \quad
        V(\varphi \leftarrow \psi) = \uparrow(V(\varphi) \setminus V(\psi)).

    Args:
        M (:class:`~combx.logic.semantics.Model`): The model.
        f (:class:`~combx.data.formula.Formula`): The formula.

    Returns:
        :python:`int`: The forcing set as a mask; always an upset.

    Raises:
        :class:`~combx.errors.UnassignedVariable`: When a variable of :python:`f` has no value.
    """
    cache = M.cache
    if f in cache:
        return cache[f]
    for g in iter_postorder(f):
        if g not in cache:
            cache[g] = _step(M.frame, g, cache, M.valuation)
    return cache[f]


def forces(M, x, f):
    """
    Returns whether point :python:`x` (an index or a label) forces :python:`f` in :python:`M`.
    """
    x = _point(M.frame, x)
    return bool(forcing_set(M, f) >> x & 1)


def forces_pointwise(M, x, f):
    r"""
    Evaluates :python:`f` at :python:`x` by the Kripke clauses themselves, quantifying over
    $\uparrow x$ for $\to$ and over $\downarrow x$ for $\leftarrow$:

    .. math::
        x \models \varphi \to \psi \iff \forall y \geq x\, (y \models \varphi \Rightarrow y \models \psi), \quad
        x \models \varphi \leftarrow \psi \iff \exists y \leq x\, (y \models \varphi \text{ and } y \not\models \psi).

    No forcing set is computed; :func:`forces` must agree with it everywhere.
    """
    X = M.frame
    memo = {}

    def holds(y, g):
        key = (y, g)
        if key in memo:
            return memo[key]
        match g:
            case Var(name):
                result = bool(M.valuation[name] >> y & 1)
            case Bot():
                result = False
            case Top():
                result = True
            case And(left, right):
                result = holds(y, left) and holds(y, right)
            case Or(left, right):
                result = holds(y, left) or holds(y, right)
            case Imp(left, right):
                result = all(
                    not holds(z, left) or holds(z, right) for z in iter_bits(X.up_masks[y])
                )
            case Coimp(left, right):
                result = any(
                    holds(z, left) and not holds(z, right) for z in iter_bits(X.down_masks[y])
                )
            case _:
                raise TypeError(f"Not a formula: {g!r}")
        memo[key] = result
        return result

    return holds(_point(X, x), f)


def _point(X, x):
    if isinstance(x, str):
        return X.index(x)
    if not 0 <= x < X.num_points:
        raise DomainError(f"Point {x} outside 0..{X.num_points - 1}.")
    return x
