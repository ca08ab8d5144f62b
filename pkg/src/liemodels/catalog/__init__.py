"""Named model algebras, explicit isomorphisms and verification routines."""

from .families import a33_iso, build_iso_algebra, c33_iso, f33_iso
from .holonomy import holonomy_analysis
from .isomorphisms import IsomorphismError, build_isomorphism
from .tables import build_table, table_cases

__all__ = ["IsomorphismError", "a33_iso", "build_isomorphism", "build_iso_algebra", "build_table",
           "c33_iso", "f33_iso", "holonomy_analysis", "table_cases"]
