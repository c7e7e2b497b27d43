import hypothesis.strategies as st

from sievecodec import IntSetPrefix, coprime, finite_sums, norm_k, sum_free

CLOSED_OPERATORS = [sum_free(), norm_k(7), coprime()]
ALL_OPERATORS = CLOSED_OPERATORS + [finite_sums(), norm_k(4), norm_k(9)]


@st.composite
def prefixes(draw, max_horizon=40, min_horizon=0):
    horizon = draw(st.integers(min_horizon, max_horizon))
    if horizon == 0:
        return IntSetPrefix((), 0)
    elements = draw(st.sets(st.integers(1, horizon)))
    return IntSetPrefix.of(elements, horizon)


bit_words = st.text(alphabet="01", max_size=64)
ternary_words = st.text(alphabet="01*", max_size=80)
