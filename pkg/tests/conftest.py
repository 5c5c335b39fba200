import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from braidcrystal.cartan import build_cartan
from braidcrystal.extcrystal import ext_F, one

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

TYPES = ("A1", "A2", "A3", "A4", "D4")


def f_words(c, max_len=10, window=(-3, 3)):
    """Strategy for lists of (i, k) colors."""
    return st.lists(
        st.tuples(st.sampled_from(c.indices), st.integers(*window)), max_size=max_len
    )


def build(c, word):
    x = one(c)
    for i, k in word:
        x = ext_F(i, k, x)
    return x


@st.composite
def ext_elements(draw, type_name, max_len=10):
    c = build_cartan(type_name)
    return build(c, draw(f_words(c, max_len)))


def rng(seed=0):
    return random.Random(seed)
