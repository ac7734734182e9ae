"""Shared hypothesis strategies, independent oracles and the acceptance summary hook."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from bcx.algebra import Bicomplex

# bounded finite reals keep products well inside float range
reals = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, reals, reals)
bicomplexes = st.builds(Bicomplex.from_cartesian, complexes, complexes)
disc_points = st.builds(
    lambda r, t: complex(r * np.cos(t), r * np.sin(t)),
    st.floats(min_value=0, max_value=0.9),
    st.floats(min_value=0, max_value=2 * np.pi),
)


def cartesian_matrix(Z: Bicomplex) -> np.ndarray:
    """Faithful 2x2 complex representation of ``z + jw``: ``[[z, -w], [w, z]]``."""
    z, w = Z.to_cartesian()
    return np.array([[z, -w], [w, z]])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
