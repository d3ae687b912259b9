"""Canonical strong cylinders of pseudo-cellular DG-operads"""

__version__ = "0.1.0"
