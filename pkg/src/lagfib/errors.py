"""Exception hierarchy shared by the classifier and the command-line front end."""

from __future__ import annotations


class LagfibError(Exception):
    """Base class for every error raised by this package."""


class NotQuasiUnipotent(LagfibError):
    """The characteristic polynomial is not a product of cyclotomic factors."""


class NotSymplectic(LagfibError):
    pass


class RankGateViolation(LagfibError):
    """rank(U^m - I) >= 2, impossible for the monodromy of a Lagrangian germ."""


class NotElliptic(LagfibError):
    pass


class UnsupportedGraph(LagfibError):
    pass


class NotAutomorphism(LagfibError):
    pass


class AmbiguousAction(LagfibError):
    pass


class TrivialRotation(LagfibError):
    pass


class InvalidAxis(LagfibError):
    pass


class OddWeightOneDimension(LagfibError):
    pass


class IncompatibleAction(LagfibError):
    pass


class InvalidModel(LagfibError):
    pass


class ClassifierError(LagfibError):
    """Base for errors raised while classifying a germ datum."""


class InconsistentDatum(ClassifierError):
    pass


class ExcludedConfiguration(ClassifierError):
    pass


class OddReflection(ClassifierError):
    pass


class InadmissibleGerm(ClassifierError):
    pass


class NothingToContract(ClassifierError):
    pass


class UnrecognizedFibre(ClassifierError):
    pass


class OrderOutOfRange(ClassifierError):
    pass


class CoefficientMismatch(LagfibError):
    pass


class EmptyDiscriminant(LagfibError):
    pass


class DuplicateComponent(LagfibError):
    pass


class ParseError(LagfibError):
    """Malformed germ file; the message names the offending field."""


class VerificationFailure(LagfibError):
    pass
