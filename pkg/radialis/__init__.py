"""
Radialis - radial calculus of the harmonic model manifolds

Numerical verification of radial spectral-geometry identities:
- Volume densities, mean curvature and radial Laplacians
- Jacobi-field reconstruction of densities from curvature spectra
- Radial Green's functions and their flux normalisation
- Ricci curvature by Ledger's formula and by the Riccati equation
- Classification of observed radial profiles against the model spaces
"""

__version__ = "0.1.0"
