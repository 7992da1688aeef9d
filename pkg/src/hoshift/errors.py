"""Exception and warning types."""


class HoshiftError(Exception):
    """Base class for all domain errors raised by the package."""

    exit_code = 2
    kind = "domain"


class ResonanceError(HoshiftError):
    kind = "resonance"

    def __init__(self, mu, divisor=None, w=None):
        self.mu = tuple(int(x) for x in mu)
        self.divisor = divisor
        self.w = w
        where = f" (Weyl element {w})" if w is not None else ""
        super().__init__(f"<mu, mu - 2 lambda> vanishes at mu={self.mu}{where}")


class ChamberError(HoshiftError):
    kind = "chamber"


class DomainError(HoshiftError):
    kind = "domain"


class PoleError(HoshiftError):
    kind = "pole"


class ParameterPoleError(PoleError):
    kind = "parameter_pole"


class SpectralPoleError(HoshiftError):
    kind = "spectral_pole"

    def __init__(self, msg, w=None):
        self.w = w
        super().__init__(msg if w is None else f"{msg} (Weyl element {w})")


class PolarMultiplicityError(HoshiftError):
    exit_code = 3
    kind = "polar_multiplicity"


class IndicialCollisionError(HoshiftError):
    kind = "indicial_collision"


class RepresentationError(HoshiftError):
    kind = "representation"


class WeightSingularityError(HoshiftError):
    kind = "weight_singularity"


class WallSingularityError(HoshiftError):
    kind = "wall_singularity"


class VanishingFactorError(HoshiftError):
    kind = "vanishing_factor"


class DegenerateFitError(HoshiftError):
    kind = "degenerate_fit"


class QuadratureWarning(UserWarning):
    pass


class IndeterminateWarning(UserWarning):
    pass
