from hypothesis import strategies as st

from realbicyclic import Elem

nonneg_scalars = st.fractions(min_value=0, max_value=30, max_denominator=8)
small_scalars = st.fractions(min_value=0, max_value=6, max_denominator=8)
elems = st.builds(Elem, nonneg_scalars, nonneg_scalars)
small_elems = st.builds(Elem, small_scalars, small_scalars)
