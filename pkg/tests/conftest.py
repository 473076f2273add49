from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from loghankel.series import EXACT, TruncatedSeries

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.builds(
    Fraction, st.integers(min_value=-20, max_value=20), st.integers(min_value=1, max_value=20)
)


@st.composite
def rational_series(draw, min_order=1, max_order=12, unit=False, zero_const=False):
    order = draw(st.integers(min_value=min_order, max_value=max_order))
    coeffs = draw(st.lists(small_fractions, min_size=order + 1, max_size=order + 1))
    if unit:
        coeffs[0] = Fraction(1)
    if zero_const:
        coeffs[0] = Fraction(0)
    return TruncatedSeries(tuple(coeffs), EXACT)


@st.composite
def normalized_series(draw, min_order=7, max_order=12):
    s = draw(rational_series(min_order=min_order, max_order=max_order))
    return TruncatedSeries((0, 1) + s.coeffs[2:], EXACT)


unit_disk_fraction = st.builds(
    Fraction, st.integers(min_value=-9, max_value=9), st.just(10)
)


#: (criterion, passed, detail) rows filled in by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, ok, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {crit:>2}: {detail}")
