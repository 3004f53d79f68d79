"""
Catalogue Module
Bundled operator specs and floating-point demo presets
"""

__version__ = '1.0.0'
__all__ = ['catalogue_manager']
