# -*- coding: utf-8 -*-

"""
degenlab

Exact verification of degenerations, non-degenerations, rigid algebras and
irreducible components for three-dimensional Jordan superalgebras.
"""

__version__ = "0.1.0"
