from hypothesis import settings, strategies as st

from dowkit.words import normalize

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@st.composite
def canonical_dows(draw, max_size: int = 4, min_size: int = 0):
    """A canonical DOW drawn as a random shuffle of {1,1,...,n,n}."""
    n = draw(st.integers(min_size, max_size))
    pool = [a for a in range(1, n + 1) for _ in range(2)]
    return normalize(tuple(draw(st.permutations(pool))))


@st.composite
def arbitrary_words(draw, max_len: int = 10, max_symbol: int = 12):
    return tuple(
        draw(st.lists(st.integers(1, max_symbol), max_size=max_len))
    )
