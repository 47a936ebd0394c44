"""Average-degree bounds for critical graphs."""

from fractions import Fraction

from ._core import *  # noqa: F401,F403
from ._core import main_bound as _main_bound


def main_bound_fraction(k, preset="smallP"):
    return Fraction(_main_bound(k, preset))


__version__ = "0.1.0"
