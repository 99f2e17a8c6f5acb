import math
from itertools import combinations

import pytest

from scxpath import ConfigInvalid, GeneratorConfig, generate, serialize
from scxpath.generate import mix64, unit


def test_mix64_reference_values():
    # SplitMix64 with state 0: first outputs of the reference generator
    assert mix64(0) == 0xE220A8397B1DCDAF
    assert mix64(0x9E3779B97F4A7C15) == 0x6E789E6AA1B965F4


def test_p_zero_is_empty():
    assert generate(GeneratorConfig(n=6, d=2, p=0.0, seed=3)).m == 0


def test_p_one_takes_everything():
    X = generate(GeneratorConfig(n=4, d=2, p=1.0, seed=3))
    assert sorted(X.top) == list(combinations(range(1, 5), 3))


def test_deterministic():
    cfg = GeneratorConfig(n=9, d=2, p=0.4, weight_low=0.5, weight_high=3.0, seed=2**64 - 1)
    assert serialize(generate(cfg)) == serialize(generate(cfg))


def test_seed_matters():
    a = generate(GeneratorConfig(n=9, d=2, p=0.5, seed=1))
    b = generate(GeneratorConfig(n=9, d=2, p=0.5, seed=2))
    assert a != b


def test_integer_weights_cover_range():
    X = generate(GeneratorConfig(n=12, d=2, p=1.0, weight_low=1, weight_high=10, integer_weights=True, seed=5))
    ws = set(X.top.values())
    assert ws == set(map(float, range(1, 11)))


def test_real_weights_in_range():
    X = generate(GeneratorConfig(n=10, d=3, p=0.7, weight_low=2.0, weight_high=2.5, seed=11))
    assert all(2.0 <= w <= 2.5 for w in X.top.values())


def test_unit_interval():
    us = [unit(7, r, s) for r in range(2000) for s in (0, 1)]
    assert all(0.0 <= u < 1.0 for u in us)
    assert abs(sum(us) / len(us) - 0.5) < 0.02


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n=3, d=3, p=0.5),
        dict(n=3, d=0, p=0.5),
        dict(n=5, d=2, p=1.5),
        dict(n=5, d=2, p=-0.1),
        dict(n=5, d=2, p=0.5, weight_low=3, weight_high=2),
        dict(n=5, d=2, p=0.5, weight_low=-1, weight_high=2),
        dict(n=5, d=2, p=0.5, weight_low=0, weight_high=math.inf),
        dict(n=5, d=2, p=0.5, weight_low=1.2, weight_high=1.8, integer_weights=True),
        dict(n=5, d=2, p=0.5, seed=-1),
        dict(n=5, d=2, p=0.5, seed=2**64),
    ],
)
def test_config_invalid(kwargs):
    with pytest.raises(ConfigInvalid):
        generate(GeneratorConfig(**kwargs))


def test_expected_size():
    n, d, p = 8, 2, 0.3
    c = math.comb(n, d + 1)
    sizes = [generate(GeneratorConfig(n=n, d=d, p=p, seed=s)).m for s in range(1000)]
    mean = sum(sizes) / len(sizes)
    se = math.sqrt(c * p * (1 - p) / len(sizes))
    assert abs(mean - p * c) < 5 * se
