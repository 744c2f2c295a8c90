"""pshlab: exact arithmetic for PSH algebras, Specht modules, Gauss sums,
wreath invariants and hyperHecke algebras of small finite groups."""

__version__ = "0.1.0"

from .cyclo import Cyclo, zeta
