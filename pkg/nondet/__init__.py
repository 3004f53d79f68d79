"""
Non-determinism Module
Finite non-determinism monad and its law suite
"""

from .monad import (
    NonDet, Kleisli, pure, mzero, mplus, bind, fmap, lift,
    kleisli_comp, mcomp, precompose, mthen, enum_subsets, kleisli_table_for
)

__version__ = '1.0.0'
__all__ = [
    'NonDet', 'Kleisli', 'pure', 'mzero', 'mplus', 'bind', 'fmap', 'lift',
    'kleisli_comp', 'mcomp', 'precompose', 'mthen', 'enum_subsets', 'kleisli_table_for',
    'laws',
]
