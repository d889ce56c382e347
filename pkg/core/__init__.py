"""dyncharge - dynamic-charge model checks: natural units, hydrogen ledger, gravity flux."""

__version__ = "0.1.0"
