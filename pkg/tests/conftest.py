from fractions import Fraction

from hypothesis import strategies as st

from kerov.partitions import partitions_of

ALPHAS = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5, 3))


def partitions_up_to(n: int, min_size: int = 0):
    return st.integers(min_size, n).flatmap(lambda k: st.sampled_from(partitions_of(k)))


alphas = st.sampled_from(ALPHAS)
