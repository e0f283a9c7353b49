# cython: language_level=3
"""Compiled twin of ``quadconc._purekernel``.

Same functions, same semantics, same unbounded-integer exactness; only the
interpreter overhead of the inner loops is removed.  Values stay Python
ints because coordinates routinely outgrow machine words.
"""

from math import gcd


def reduce3(x, y, z):
    cdef bint neg
    g = gcd(x, y, z)
    if g == 0:
        raise ValueError("zero triple has no canonical form")
    if g != 1:
        x //= g
        y //= g
        z //= g
    if z != 0:
        neg = z < 0
    elif y != 0:
        neg = y < 0
    else:
        neg = x < 0
    if neg:
        return (-x, -y, -z)
    return (x, y, z)


def cross3(u, v):
    ux, uy, uw = u
    vx, vy, vw = v
    return (uy * vw - uw * vy, uw * vx - ux * vw, ux * vy - uy * vx)


def det3(p, q, r):
    px, py, pw = p
    qx, qy, qw = q
    rx, ry, rw = r
    return (
        px * (qy * rw - qw * ry)
        - py * (qx * rw - qw * rx)
        + pw * (qx * ry - qy * rx)
    )


def dot3(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
