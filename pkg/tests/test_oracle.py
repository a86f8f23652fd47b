import pytest

from linemark.feasibility import Params, feasibility
from linemark.oracle import SearchLimits, search
from linemark.verify import verify

SMALL = [(2, n) for n in (1, 2, 3)] + [(3, 2)]


@pytest.mark.parametrize("k,n", SMALL)
def test_oracle_agrees_with_feasibility(k, n):
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            p = Params(k, n, a, b)
            res = search(p, SearchLimits(max_nodes=2_000_000, max_seconds=30))
            assert res.status != "exhausted"
            assert res.found == (feasibility(p) is not None), p
            if res.found:
                assert verify(res.marking.with_claim(a, b), p).ok


@pytest.mark.parametrize(
    "p,status",
    [
        (Params(2, 2, 0, 1), "found"),
        (Params(2, 2, 0, 2), "found"),
        (Params(3, 2, 1, 2), "none"),
        (Params(2, 3, 2, 3), "none"),
    ],
)
def test_examples(p, status):
    assert search(p).status == status


def test_deterministic():
    p = Params(2, 3, 1, 3)
    r1, r2 = search(p), search(p)
    assert r1.found and r1.marking == r2.marking and r1.nodes == r2.nodes


def test_stretch_instance_budget_gated():
    # [0,2]_3^3 does not exist; a small budget must give up rather than claim anything
    res = search(Params(3, 3, 0, 2), SearchLimits(max_nodes=20_000, max_seconds=5))
    assert res.status == "exhausted"
    assert res.marking is None


def test_limits_must_be_positive():
    with pytest.raises(ValueError):
        SearchLimits(max_nodes=0)
    with pytest.raises(ValueError):
        SearchLimits(max_seconds=-1)
