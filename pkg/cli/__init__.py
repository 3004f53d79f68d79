"""
CLI Module
nondet-agg subcommands, report rendering and exit-code mapping
"""

__version__ = '1.0.0'
__all__ = ['app', 'commands', 'render']
