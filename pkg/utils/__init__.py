"""
Utility Functions Module
Logging, report export and CLI input validation
"""

__version__ = '1.0.0'
__all__ = ['logger', 'export', 'validator']
