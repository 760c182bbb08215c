"""Exception hierarchy.

Every validation failure raises a subclass of SpanburnError so the CLI can
map them onto exit code 2 uniformly.
"""


class SpanburnError(Exception):
    """Base class for all errors raised by this package."""


# group construction
class NonAssociative(SpanburnError):
    pass


class NoIdentity(SpanburnError):
    pass


class NoInverse(SpanburnError):
    pass


class GeneratorClosureOverflow(SpanburnError):
    pass


class CapExceeded(SpanburnError):
    pass


# G-sets and bisets
class NotAnAction(SpanburnError):
    pass


class ActionsDoNotCommute(SpanburnError):
    pass


class LeftActionNotFree(SpanburnError):
    pass


class GroupMismatch(SpanburnError):
    pass


class TargetMismatch(SpanburnError):
    pass


class NotEquivariant(SpanburnError):
    pass


# spans
class FeetMismatch(SpanburnError):
    pass


class NontrivialGroup(SpanburnError):
    pass


# semiring matrices
class ShapeMismatch(SpanburnError):
    pass


class EntryOutOfCarrier(SpanburnError):
    pass


# mackey
class UnfactorableSpan(SpanburnError):
    pass


# duality
class ActionIncompatible(SpanburnError):
    pass


class NotEpi(SpanburnError):
    pass


class WrongSource(SpanburnError):
    pass


class CorpusOverflow(SpanburnError):
    pass


class PceViolation(SpanburnError):
    pass


class FreenessFailure(SpanburnError):
    pass


# groupoids
class NotAGroupoid(SpanburnError):
    pass


class NotAFunctor(SpanburnError):
    pass


class IngressiveNotFibration(SpanburnError):
    pass


# operads
class AxiomViolation(SpanburnError):
    def __init__(self, name, witness=None):
        super().__init__(f"operad axiom violated: {name} (witness={witness!r})")
        self.name = name
        self.witness = witness


class ArityOverflow(SpanburnError):
    pass


# cli / io
class MalformedInput(SpanburnError):
    pass


class UnknownCommand(SpanburnError):
    pass
