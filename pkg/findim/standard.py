"""Standard tableaux: the labels of a basis of a finite-dimensional module."""
from core.rationals import is_integer


def is_standard(t):
    """l_{k,i} - l_{k-1,i} in Z>=0 and l_{k-1,i} - l_{k,i+1} in Z>0 for all rows"""
    for k in range(2, t.n + 1):
        for i in range(1, k):
            below = t.entry(k - 1, i)
            upper_left = t.entry(k, i) - below
            if not is_integer(upper_left) or upper_left < 0:
                return False
            lower_right = below - t.entry(k, i + 1)
            if not is_integer(lower_right) or lower_right <= 0:
                return False
    return True
