"""Analysis of vectorial Boolean functions over F_2^n: Walsh spectra,
derived vector space partitions, blocking sets and admissible amplitude
distributions."""

from .vbf import VBF, AmplitudeDistribution, NotPlateaued
from .gf2 import Subspace, AffineSubspace

__all__ = ["VBF", "AmplitudeDistribution", "NotPlateaued", "Subspace",
           "AffineSubspace"]

__version__ = "0.1.0"
