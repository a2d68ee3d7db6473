"""Exception types shared across the package."""


class LatModalError(Exception):
    """Base class for all latmodal errors."""


class InvalidInput(LatModalError):
    """Malformed arguments: duplicate names, unknown references, bad modes."""


class NotAPoset(LatModalError):
    """The closed order relation violates antisymmetry."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(
            f"antisymmetry fails after closure: {pair[0]!r} and {pair[1]!r} "
            f"are related in both directions"
        )


class NotALattice(LatModalError):
    """Some pair of elements lacks a greatest lower or least upper bound."""

    def __init__(self, pair, kind):
        self.pair = pair
        self.kind = kind
        super().__init__(f"no unique {kind} for the pair {pair[0]!r}, {pair[1]!r}")


class MissingOperation(LatModalError):
    """An operation table (neg or imp) was requested but is not defined."""

    def __init__(self, operation):
        self.operation = operation
        super().__init__(f"operation {operation!r} is not defined on this lattice")


class ModalFormulaRejected(LatModalError):
    """A box operator occurred where only propositional formulas are allowed."""


class UnboundVariable(LatModalError):
    """A variable has no value at a world the evaluation needs."""

    def __init__(self, world, variable):
        self.world = world
        self.variable = variable
        super().__init__(f"variable {variable!r} has no value at world {world!r}")


class BoundTooLarge(LatModalError):
    """A search or enumeration bound exceeds the configured safety guard."""


class WitnessNotApplicable(LatModalError):
    """The matrix does not exhibit the defect a witness construction needs."""


class NotBoolean(LatModalError):
    """The base lattice is not a Boolean algebra."""


class FormulaSyntaxError(LatModalError):
    """Formula text rejected; carries a byte offset and the expected tokens."""

    def __init__(self, offset, expected, found):
        self.offset = offset
        self.expected = frozenset(expected)
        self.found = found
        options = ", ".join(sorted(self.expected))
        super().__init__(f"at byte {offset}: found {found}, expected one of: {options}")


class FileFormatError(LatModalError):
    """A lattice or model file violates its JSON schema."""
