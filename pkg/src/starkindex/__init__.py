"""Index formulae for minus-part unit lattices of cyclic CM-type extensions."""

__version__ = "0.1.0"
