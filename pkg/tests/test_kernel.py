import pytest

from quadrics import _kernel_py
from quadrics.cells import r_set
from quadrics.kernel import BACKEND, available_backends, cell_census
from quadrics.parabolic import SimpleSubset, enumerate_special, minimal_coset_reps


def census_oracle(n, members):
    """Recompute the census through the element-wise public API."""
    k = SimpleSubset(n, members)
    counts = {}
    for w in minimal_coset_reps(k):
        mask = 0
        for i in r_set(k, w):
            mask |= 1 << (i - 1)
        key = (w.length, mask)
        counts[key] = counts.get(key, 0) + 1
    return counts


def test_backend_is_reported():
    assert BACKEND in ("compiled", "pure-python")
    assert "pure-python" in available_backends()


def test_pure_kernel_matches_elementwise_oracle():
    for n in range(1, 6):
        for k in enumerate_special(n):
            assert _kernel_py.cell_census(n, k.members) == census_oracle(n, k.members)


def test_compiled_kernel_matches_pure_kernel():
    backends = available_backends()
    if "compiled" not in backends:
        pytest.skip("compiled kernel not built")
    compiled = backends["compiled"]
    for n in range(1, 7):
        for k in enumerate_special(n):
            assert compiled.cell_census(n, k.members) == _kernel_py.cell_census(
                n, k.members
            )


def test_census_total_counts():
    import math

    for n in range(1, 7):
        for k in enumerate_special(n):
            total = sum(cell_census(n, k.members).values())
            assert total == math.factorial(n) // 2 ** len(k)


def test_census_validation():
    with pytest.raises(ValueError):
        cell_census(0, ())
    with pytest.raises(ValueError):
        cell_census(4, (3, 1))
    with pytest.raises(ValueError):
        cell_census(4, (1, 2))
    with pytest.raises(ValueError):
        cell_census(3, (5,))


def test_compiled_kernel_rank_guard():
    backends = available_backends()
    if "compiled" not in backends:
        pytest.skip("compiled kernel not built")
    with pytest.raises(ValueError):
        backends["compiled"].cell_census(15, ())
