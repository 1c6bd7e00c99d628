from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from tripart import Graph, generate

settings.register_profile(
    "suite",
    database=None,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"

# the seeded sweep: both random families, three sizes, ten seeds each with
# p cycling through three densities -- 60 graphs total
SWEEP = [
    (family, n, (0.3, 0.5, 0.8)[seed % 3], seed)
    for family in ("gnp", "planted")
    for n in (6, 9, 12)
    for seed in range(1, 11)
]


def octahedron_graph() -> Graph:
    return Graph.from_edges(6, [(u, v)
                                for u in range(1, 7)
                                for v in range(u + 1, 7)
                                if v - u != 3])


@pytest.fixture(scope="session")
def k6() -> Graph:
    return generate("complete", 6)


@pytest.fixture(scope="session")
def k9() -> Graph:
    return generate("complete", 9)


@pytest.fixture(scope="session")
def c6() -> Graph:
    return generate("cycle", 6)


@pytest.fixture(scope="session")
def prism() -> Graph:
    return generate("prism", 6)


@pytest.fixture(scope="session")
def octahedron() -> Graph:
    return octahedron_graph()


@pytest.fixture(scope="session")
def dt9() -> Graph:
    return generate("disjoint_triangles", 9)


@pytest.fixture(scope="session")
def corpus_files() -> list[Path]:
    files = sorted(CORPUS_DIR.glob("*.col"))
    assert files, "bundled corpus is missing"
    return files


@pytest.fixture(scope="session")
def sweep_graphs() -> list[tuple[str, Graph]]:
    return [(f"{family}(n={n},p={p},seed={seed})", generate(family, n, p=p, seed=seed))
            for family, n, p, seed in SWEEP]
