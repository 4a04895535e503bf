"""antiflex: exact verification and construction engine for anti-flexible
and pre-anti-flexible algebras over the rationals."""

__version__ = "0.1.0"
