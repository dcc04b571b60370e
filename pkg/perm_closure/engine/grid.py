# -*- coding: utf-8 -*-
"""Module perm_closure.engine.grid.py

This module contains the state label grid: the values of the state label
function sigma on a box of N_0^k, computed from the recurrence

    sigma(0) = initial label
    sigma(p) = union over j with p_j > 0 of f(sigma(p - e_j), a_j)

in order of nondecreasing coordinate sum, plus the per-axis index/period
analysis of sigma along axis-parallel rays.
"""

import itertools
import logging

from perm_closure.config.constants import DEFAULT_GRID_CAP
from perm_closure.exceptions.construction_exception import GridCapException
from perm_closure.exceptions.construction_exception import \
    RayProfileException
from perm_closure.functions.general import lcm
from perm_closure.functions.general import mask_to_states
from perm_closure.functions.general import product

class GridBounds(object):
    """Per-axis index I_j and period P_j of a grid box

    The box has extent B_j = I_j + P_j along axis j; the grid automaton wraps
    coordinate j from B_j - 1 back to I_j.

    Attributes:
        index (tuple): I_j per axis
        period (tuple): P_j per axis
        guaranteed (bool): the bounds come from the letter orders of a
            permutation carrier, so sigma is known to repeat with them
    """

    def __init__(self, index, period, guaranteed=False):
        self.index = tuple(index)
        self.period = tuple(period)
        self.guaranteed = guaranteed

    @classmethod
    def box(cls, extents):
        """plain box of the given extents, without any periodicity claim"""

        extents = tuple(extents)
        return cls(tuple(e - 1 for e in extents), (1,) * len(extents))

    @property
    def extents(self):
        return tuple(i + p for i, p in zip(self.index, self.period))

    @property
    def point_count(self):
        return product(self.extents)

    def describe(self):
        return " x ".join(str(e) for e in self.extents) + " = " \
            + str(self.point_count) + " points"

    def __eq__(self, other):
        return isinstance(other, GridBounds) and \
            (self.index, self.period, self.guaranteed) == \
            (other.index, other.period, other.guaranteed)

    def __repr__(self):
        return ("GridBounds(index=" + repr(self.index) + ", period="
                + repr(self.period) + ", guaranteed=" + str(self.guaranteed)
                + ")")

def grid_bounds(lf):
    """I_j = (|Q| - 1) L_j and P_j = L_j for the carrier letter orders L_j

    Raises:
        NotPermutationException: the carrier is not a permutation
            semi-automaton
    """

    orders = lf.letter_orders()
    n = lf.carrier_size
    return GridBounds(tuple((n - 1) * L for L in orders), orders,
                      guaranteed=True)

def evaluation_order(extents):
    """all box points by coordinate sum, ties broken lexicographically"""

    points = itertools.product(*(range(e) for e in extents))
    return sorted(points, key=lambda p: (sum(p), p))

class StateLabelGrid(object):
    """Memoized sigma values on a box

    Attributes:
        lf (LabelFunction): the label function the grid was computed for
        bounds (GridBounds): the box
        order (list): box points in evaluation order
        labels (dict): point tuple -> label bitmask
    """

    def __init__(self, lf, bounds, order, labels):
        self.lf = lf
        self.bounds = bounds
        self.order = order
        self.labels = labels

    def in_box(self, p):
        return len(p) == len(self.bounds.extents) and \
            all(0 <= c < e for c, e in zip(p, self.bounds.extents))

    def label(self, p):
        return self.labels[tuple(p)]

    def states(self, p):
        """sorted state list of sigma(p)"""

        return mask_to_states(self.labels[tuple(p)])

    def dump(self):
        """diagnostic listing, one 'p1,...,pk : q3 q7' line per point"""

        lines = []
        for p in self.order:
            states = " ".join("q" + str(s) for s in self.states(p))
            lines.append((",".join(str(c) for c in p) + " : "
                          + states).rstrip())
        return "\n".join(lines) + "\n"

def compute_grid(lf, bounds, cap=DEFAULT_GRID_CAP):
    """evaluate sigma on every point of the box

    Raises:
        GridCapException: the box has more than cap points
    """

    extents = bounds.extents
    if bounds.point_count > cap:
        raise GridCapException(extents, cap)
    logging.info("building %s grid: %s" % (lf.kind, bounds.describe()))

    order = evaluation_order(extents)
    labels = {}
    for p in order:
        if sum(p) == 0:
            labels[p] = lf.initial
            continue
        mask = 0
        for j, c in enumerate(p):
            if c > 0:
                q = p[:j] + (c - 1,) + p[j + 1:]
                mask |= lf.step(labels[q], j)
        labels[p] = mask
    return StateLabelGrid(lf, bounds, order, labels)

class RayProfile(object):
    """Index and period of sigma along base + t e_j

    Attributes:
        axis (int): j
        base (tuple): base point, base[j] == 0
        index (int): observed index
        period (int): observed period
        labels (tuple): label bitmasks of the ray inside the box
    """

    def __init__(self, axis, base, index, period, labels):
        self.axis = axis
        self.base = tuple(base)
        self.index = index
        self.period = period
        self.labels = tuple(labels)

    def __repr__(self):
        return ("RayProfile(axis=" + str(self.axis) + ", base="
                + repr(self.base) + ", index=" + str(self.index)
                + ", period=" + str(self.period) + ")")

def ray_labels(grid, j, base):
    extent = grid.bounds.extents[j]
    return [grid.labels[base[:j] + (t,) + base[j + 1:]]
            for t in range(extent)]

def ray_profile(grid, j, base):
    """smallest index and period of sigma along the ray from base on axis j

    On guaranteed grids the ray is extended beyond the box by the known
    repetition with period P_j after I_j, so the profile is exact. On plain
    boxes the pattern must be seen to repeat within the box: i + 2p is at
    most the extent.

    Raises:
        RayProfileException: base outside the box or base[j] != 0, or no
            repetition is visible within the box
    """

    base = tuple(base)
    if not grid.in_box(base) or base[j] != 0:
        raise RayProfileException("ray base " + repr(base) + " must lie in "
                                  + "the box with coordinate " + str(j)
                                  + " equal to 0")
    labels = ray_labels(grid, j, base)
    bounds = grid.bounds

    if bounds.guaranteed:
        I = bounds.index[j]
        P = bounds.period[j]

        def at(t):
            if t < len(labels):
                return labels[t]
            return labels[I + (t - I) % P]

        def repeats(i, p):
            return all(at(t) == at(t + p) for t in range(i, max(i, I) + P))

        for p in range(1, P + 1):
            if P % p != 0 or not repeats(I, p):
                continue
            i = 0
            while not repeats(i, p):
                i += 1
            return RayProfile(j, base, i, p, labels)

    extent = len(labels)
    for i in range(extent):
        for p in range(1, (extent - i) // 2 + 1):
            if all(labels[t] == labels[t + p] for t in range(i, extent - p)):
                return RayProfile(j, base, i, p, labels)
    raise RayProfileException("no repetition of labels along axis " + str(j)
                              + " from " + repr(base) + " within the box")

def hyperplane(bounds, j):
    """box points with coordinate j equal to 0"""

    ranges = [range(e) if axis != j else range(1)
              for axis, e in enumerate(bounds.extents)]
    return list(itertools.product(*ranges))

def shrink_bounds(grid):
    """per-axis (max observed index, lcm of observed periods) over all rays

    Only meaningful on a guaranteed grid, whose profiles are exact; the
    result is never larger than the grid's own bounds.
    """

    index = []
    period = []
    for j in range(len(grid.bounds.extents)):
        profiles = [ray_profile(grid, j, base)
                    for base in hyperplane(grid.bounds, j)]
        index.append(max(r.index for r in profiles))
        period.append(lcm(*(r.period for r in profiles)))
    shrunk = GridBounds(index, period)
    logging.debug("shrunk grid bounds from %s to %s" %
                  (grid.bounds.describe(), shrunk.describe()))
    return shrunk
