# src/services/arc_service/__init__.py
"""
Толстые точки, аффинные схемы, струи, пространства дуг и автодуг.
"""
from src.services.arc_service.arcs import ArcPresentation, arc_space, auto_arc, flat_basis_order, jet
from src.services.arc_service.fat_point import (
    FatPoint,
    fat_point_from_strings,
    linear_fat_point,
    make_fat_point,
    product_fat_point,
)
from src.services.arc_service.scheme import AffineScheme, preset, preset_names, product_scheme

__all__ = [
    "AffineScheme",
    "ArcPresentation",
    "FatPoint",
    "arc_space",
    "auto_arc",
    "fat_point_from_strings",
    "flat_basis_order",
    "jet",
    "linear_fat_point",
    "make_fat_point",
    "preset",
    "preset_names",
    "product_fat_point",
    "product_scheme",
]
