import hypothesis.strategies as st
from hypothesis import settings

from nilcox.affine_perm import from_word

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ranks = st.integers(min_value=1, max_value=4)


@st.composite
def elements(draw, k=None, max_word=8):
    """Random affine permutation from a random (not necessarily reduced) word."""
    if k is None:
        k = draw(ranks)
    word = draw(st.lists(st.integers(0, k), max_size=max_word))
    return from_word(k, word)


@st.composite
def element_pairs(draw, max_word=6):
    k = draw(ranks)
    return draw(elements(k, max_word)), draw(elements(k, max_word))


small_compositions = st.lists(st.integers(1, 3), min_size=1, max_size=4).map(tuple)
