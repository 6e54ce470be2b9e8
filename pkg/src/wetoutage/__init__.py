"""Outage probability of wireless energy transfer from a multi-antenna array."""

from .analytic import OutageEstimate, ScenarioSpec, analytic_outage
from .channel import FadingSpec, SystemParams, fading_spec
from .errors import (DomainError, FormulaInvalidError, IllConditionedError,
                     NoClosedFormError, NumericalError, WetError)

__version__ = "0.1.0"
