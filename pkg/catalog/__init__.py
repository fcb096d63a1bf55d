"""
Reference metrics and metric constructions with known classifications.
"""

from catalog.brinkmann import BrinkmannParams, PlaneWaveProfile, brinkmann_build, plane_wave, plane_wave_expected
from catalog.builtin import builtin_metrics, catalog_names, get_entry
from catalog.transforms import direct_product, flat_extension, rescale_coordinates

__all__ = [
    'BrinkmannParams',
    'PlaneWaveProfile',
    'brinkmann_build',
    'plane_wave',
    'plane_wave_expected',
    'builtin_metrics',
    'catalog_names',
    'get_entry',
    'direct_product',
    'flat_extension',
    'rescale_coordinates',
]
