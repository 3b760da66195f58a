"""
Cyclic p-gonal descent toolkit - fields of moduli, Galois cocycles and models over Q
"""

__version__ = '1.0.0'
