"""Shared fixtures and hypothesis strategies for the apps' tests."""
from fractions import Fraction

from hypothesis import strategies as st

from .tableaux import Seed, Shift, shift_length


def omega_example_seed(a=Fraction(0), b=Fraction(1, 3), c=Fraction(2, 3)):
    """(a, b, c | a, b+1 | a): Omega+ of the unshifted tableau is {(3,1,1), (2,1,1)}"""
    return Seed.from_rows((a, b, c), (a, b + 1), (a,))


def block_example_seed(a=Fraction(0), b=Fraction(1, 3), c=Fraction(5, 7)):
    """(a, a-1, b | a, b | c): a block with six irreducible modules"""
    return Seed.from_rows((a, a - 1, b), (a, b), (c,))


def irreducible_seed():
    """Omega is empty, so V(T(L)) is irreducible"""
    return Seed.from_rows(
        (Fraction(1, 2), Fraction(1, 3), Fraction(1, 7)),
        (Fraction(1, 5), Fraction(2, 5)),
        (Fraction(3, 4),),
    )


def gl_shift(m, n, k):
    """The gl(3) shift (m, n, k) = (z_21, z_22, z_11)"""
    return Shift((m, n, k))


@st.composite
def generic_seeds(draw, n=None, denominator=5, spread=2):
    if n is None:
        n = draw(st.integers(min_value=2, max_value=4))
    rows = []
    for k in range(n, 0, -1):
        residues = draw(st.lists(
            st.integers(min_value=0, max_value=denominator - 1),
            min_size=k, max_size=k, unique=(k < n)))
        wholes = draw(st.lists(
            st.integers(min_value=-spread, max_value=spread), min_size=k, max_size=k))
        rows.append(tuple(
            Fraction(whole * denominator + residue, denominator)
            for whole, residue in zip(wholes, residues)))
    return Seed(tuple(rows))


def shifts(n, radius=3):
    length = shift_length(n)
    return st.lists(
        st.integers(min_value=-radius, max_value=radius),
        min_size=length, max_size=length,
    ).map(lambda entries: Shift(tuple(entries)))


@st.composite
def seeded_tableaux(draw, n=None, radius=3):
    seed = draw(generic_seeds(n=n))
    return seed.tableau(draw(shifts(seed.n, radius)))


def deep_class_seed():
    """(0, 1/3, 2/3 | -1, 1/2 | -2): one of its four classes first appears
    at z_11 = 4, beyond max|omega| + 2"""
    return Seed.from_rows(
        (0, Fraction(1, 3), Fraction(2, 3)),
        (-1, Fraction(1, 2)),
        (-2,),
    )


def linked_chain_seed():
    """gl(4) seed (0, 1/3, 2/3, 1/5 | 0, 1/3, 2/3 | 0, 1/3 | 0): six omega
    triples, all zero on the unshifted tableau"""
    return Seed.from_rows(
        (0, Fraction(1, 3), Fraction(2, 3), Fraction(1, 5)),
        (0, Fraction(1, 3), Fraction(2, 3)),
        (0, Fraction(1, 3)),
        (0,),
    )
