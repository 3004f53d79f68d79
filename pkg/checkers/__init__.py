"""
Checkers Module
perm/insert lemmas, list homomorphisms and the aggregate model
"""

__version__ = '1.0.0'
__all__ = ['engine', 'report', 'permlib', 'homlib', 'sparkagg']
