"""Domain-level exceptions shared across the package."""


class DomainError(Exception):
    """Base for errors that signal a mathematically impossible request."""


class SpectrumNotSplit(DomainError):
    """A characteristic/minimal polynomial has an irreducible factor of
    degree >= 2 over Q(i), so an exact eigenvalue decomposition does not
    exist in this scalar field."""


class SolvabilityViolated(DomainError):
    """The closed-form deformation solutions were requested for a
    coefficient matrix that fails the solvability constraint."""


class NonConstantA(DomainError):
    """The closed-form deformation solutions are only certified for a
    constant coefficient matrix; see higgsing.fundamental_solutions."""


class ProfileError(DomainError):
    """A cyclic orbit profile is malformed (not alternating
    interval/junction)."""
