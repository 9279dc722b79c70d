"""troprr: exact-arithmetic tropical intersection theory, Euler calculus, and
Riemann-Roch verification on desk-scale instances."""

__version__ = "0.1.0"
