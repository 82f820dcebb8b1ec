"""Exact computations in q-deformed Fock spaces of level-one U_q(sl_n-hat) modules."""

__version__ = "0.1.0"
