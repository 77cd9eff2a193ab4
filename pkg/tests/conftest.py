from hypothesis import settings
from hypothesis import strategies as st

# brute-force oracles and first-call jit compilation make timings noisy
settings.register_profile("permlab", deadline=None)
settings.load_profile("permlab")


@st.composite
def perms(draw, min_size=0, max_size=8):
    n = draw(st.integers(min_size, max_size))
    return tuple(draw(st.permutations(range(1, n + 1))))
