"""
Besov Ill-Posedness Lab

A spectral-analysis laboratory for the incompressible Euler equations:
Littlewood-Paley blocks and Besov norms on a doubly periodic grid, an explicit
lacunary initial datum, a pseudo-spectral velocity solver, and experiment
drivers that measure norm inflation in B^sigma_{p,inf}.
"""

__version__ = "1.0.0"
