"""hopflab: exact verification of finite-dimensional Hopf algebra
deformations, Yetter-Drinfeld categories and braided Galois objects."""

__version__ = "0.1.0"
