import pytest

from scxpath import GeneratorConfig, WeightedComplex, generate, load_fixture


def theorem_corpus():
    """504 small complexes: d in {1,2,3}, p in {0.2,0.5,0.8}, 2..7 vertices, integer weights 1..10."""
    out = []
    for d in (1, 2, 3):
        for p in (0.2, 0.5, 0.8):
            for k in range(56):
                n = d + 1 + k % (7 - d)
                seed = 1_000 * k + 10 * d + int(p * 10)
                cfg = GeneratorConfig(n=n, d=d, p=p, weight_low=1, weight_high=10, integer_weights=True, seed=seed)
                out.append(generate(cfg))
    return out


@pytest.fixture(scope="session")
def corpus():
    return theorem_corpus()


@pytest.fixture
def fig2():
    return load_fixture("fig2")


@pytest.fixture
def fig3():
    return load_fixture("fig3")


@pytest.fixture
def fig5():
    return load_fixture("fig5")


@pytest.fixture
def fig6():
    return load_fixture("fig6")


@pytest.fixture
def empty2():
    return WeightedComplex(2, 5, {})


# acceptance reporting: one line per criterion in the terminal summary

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = marker.args
        _acceptance.append((number, title, "PASS" if rep.passed else "FAIL", rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, dur in sorted(_acceptance):
        terminalreporter.write_line(f"[{status}] {number}. {title} ({dur:.2f}s)")
