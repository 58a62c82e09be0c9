"""Exception hierarchy shared by all modules."""


class SemigroupError(ValueError):
    """Base class for invalid-input conditions."""


class EmptyGenerators(SemigroupError):
    pass


class GcdNotOne(SemigroupError):
    """The generators have a common factor, so the monoid is not cofinite."""


class IsFullMonoid(SemigroupError):
    """The operation needs a proper semigroup (k[[H]] not a DVR)."""


class BaseMismatch(SemigroupError):
    """Two relative ideals live over different semigroups."""


class NotContained(SemigroupError):
    """A length lambda(E/F) was requested with F not inside E."""


class PreconditionUnmet(SemigroupError):
    pass


class GorensteinCase(SemigroupError):
    """Symmetric 3-generated semigroups have no Herzog matrix."""


class NotThreeGenerated(SemigroupError):
    pass


class DegenerateSign(SemigroupError):
    pass


class InternalMismatch(AssertionError):
    """Two independent computations of the same invariant disagree.

    This always indicates a bug; it is never caught inside the package.
    """
