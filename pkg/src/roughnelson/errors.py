"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class RoughNelsonError(Exception):
    exit_code = 1


class InputError(RoughNelsonError, ValueError):
    """Malformed input: unknown element names, foreign pairs, bad documents."""

    exit_code = 2


class RelationClassError(RoughNelsonError):
    """The relation lacks a property the operation requires (e.g. not a quasiorder)."""

    exit_code = 3


class CapacityError(RoughNelsonError):
    exit_code = 4


class LatticeValidationError(RoughNelsonError):
    """An order matrix failed a lattice axiom.

    ``axiom`` names the first failing check and ``witness`` holds the
    offending element names.
    """

    exit_code = 5

    def __init__(self, message, axiom, witness=()):
        super().__init__(message)
        self.axiom = axiom
        self.witness = tuple(witness)


class UnsupportedStructureError(RoughNelsonError):
    exit_code = 5


class PreconditionError(RoughNelsonError):
    """A structural precondition failed; ``axiom`` names which one."""

    exit_code = 6

    def __init__(self, message, axiom, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class ConsistencyError(RoughNelsonError):
    """An internal cross-check disagreed. Indicates an invalid input or a bug."""

    exit_code = 7
