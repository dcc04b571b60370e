# -*- coding: utf-8 -*-
"""Module perm_closure.exceptions.construction_exception.py

This module contains class definitions for exceptions raised by the state
label engine and the expression rewriter.
"""

class ConstructionException(Exception):
    """Exception for constructions that cannot be completed"""

    pass

class GridCapException(ConstructionException):
    """Raised when a state label grid would exceed the point-count cap

    Attributes:
        extents (tuple): per-axis extents of the requested box
        cap (int): configured maximum number of grid points
    """

    def __init__(self, extents, cap):
        total = 1
        for extent in extents:
            total *= extent
        super(GridCapException, self).__init__(
            "grid of " + " x ".join(str(e) for e in extents) + " = "
            + str(total) + " points exceeds cap " + str(cap))
        self.extents = tuple(extents)
        self.cap = cap

class RewriteBudgetException(ConstructionException):
    """Raised when normalization exceeds its rule-application budget"""

    pass

class RewriteLoopException(ConstructionException):
    """Raised when a rewrite chain revisits a term it already produced"""

    pass

class ShuffleAlphabetException(ConstructionException):
    """Raised when the inputs of a shuffle build use different alphabets"""

    pass

class RayProfileException(ConstructionException):
    """Raised when no repetition is visible along a ray inside the box"""

    pass
