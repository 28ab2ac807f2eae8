"""Seeded random ideals, nested pairs and reduced chains."""

import random

from .ideal import ZeroDimIdeal
from .nest import NestChain, elementary_transform, fiber_basis

# a few points close together so supports collide often
DEFAULT_POINTS = ((0, 0), (1, 0), (0, 1))


def make_rng(seed):
    return random.Random(seed)


def random_functional(field, rng, dim, sparse=1 / 3):
    """Random nonzero vector; each entry is zero with probability ``sparse``."""
    while True:
        phi = [0 if rng.random() < sparse else field.random_nonzero(rng, 20)
               for _ in range(dim)]
        if any(phi):
            return phi


def random_transform(I, rng, points=DEFAULT_POINTS):
    p = rng.choice(points)
    dim = len(fiber_basis(I, p))
    return elementary_transform(I, p, random_functional(I.field, rng, dim))


def random_ideal(field, rng, n, points=DEFAULT_POINTS):
    """An ideal of colength n built by n random elementary transformations."""
    I = ZeroDimIdeal.unit(field)
    for _ in range(n):
        I = random_transform(I, rng, points)
    return I


def random_punctual_ideal(field, rng, n):
    return random_ideal(field, rng, n, ((0, 0),)).localize((0, 0))


def random_nested_pair(field, rng, n, gap, points=DEFAULT_POINTS):
    """(I, J) with J ⊆ I, colength(I) = n and colength(J) = n + gap."""
    I = random_ideal(field, rng, n, points)
    J = I
    for _ in range(gap):
        J = random_transform(J, rng, points)
    return I, J


def random_reduced_chain(field, rng, lengths, box=50):
    """Chain of reduced point sets; distinct points drawn from a box, collisions rejected."""
    pts = []
    seen = set()
    while len(pts) < max(lengths):
        p = (rng.randrange(box), rng.randrange(box))
        q = (field(p[0]), field(p[1]))
        if q not in seen:
            seen.add(q)
            pts.append(p)
    return NestChain([ZeroDimIdeal.reduced_points(field, pts[:n]) for n in lengths])
