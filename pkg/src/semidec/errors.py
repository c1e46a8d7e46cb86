"""Exception types shared across the package."""


class SemidecError(Exception):
    pass


# -- semiring construction --

class NotPrime(SemidecError):
    pass


class BoundExceeded(SemidecError):
    pass


class AxiomViolation(SemidecError):
    """A semiring law failed; carries the law name and a counterexample."""

    def __init__(self, law, counterexample):
        self.law = law
        self.counterexample = counterexample
        super().__init__(f"axiom violated: {law} at {counterexample}")


class FieldRequired(SemidecError):
    pass


# -- matrices and affine maps --

class DimensionMismatch(SemidecError):
    pass


class RingMismatch(SemidecError):
    pass


class IllegalDirection(SemidecError):
    pass


class DimensionTooSmall(SemidecError):
    pass


# -- monoid engine --

class SizeLimitExceeded(SemidecError):
    def __init__(self, limit, detail=""):
        self.limit = limit
        super().__init__(f"size limit {limit} exceeded{': ' + detail if detail else ''}")


class NotIdempotent(SemidecError):
    pass


class NotCentral(SemidecError):
    """Carries a witness pair (z, x) with zx != xz."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"subgroup not central: counterexample {pair}")


class ActionNotFaithful(SemidecError):
    pass


# -- wreath products --

class ContextMismatch(SemidecError):
    pass


class NotClosed(SemidecError):
    pass


# -- division witnesses --

class WitnessError(SemidecError):
    pass


class NotFunctional(WitnessError):
    """Two closure pairs share a target element with distinct source images."""

    def __init__(self, target, source_a, source_b):
        self.target = target
        self.sources = (source_a, source_b)
        super().__init__(f"relation not functional at target {target!r}: sources {source_a!r}, {source_b!r}")


class NotSurjective(WitnessError):
    def __init__(self, missing):
        self.missing = missing
        super().__init__(f"closure misses {len(missing)} source element(s)")


class PreimageMissing(WitnessError):
    pass


# -- reports --

class CensusMismatch(SemidecError):
    pass


class UnsupportedFormat(SemidecError):
    pass
