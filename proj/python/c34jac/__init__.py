"""Group law on Jacobians of C34 curves over prime fields.

Divisors are tuples (a, b, c, d, e, f) for F = x^2 + a y + b x + c and
G = xy + d y + e x + f. Group operations return (divisor, muls, invs).
"""

from ._c34 import AtypicalError, C34Error, Curve, is_prime

__all__ = ["AtypicalError", "C34Error", "Curve", "is_prime"]
