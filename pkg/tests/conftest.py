"""Shared fixtures: the bundled synthetic corpus piped end to end.

Several test files score the same 120-document collection, so the matrix,
distances, dendrogram and default sweep are built once per session.
"""

import pytest

from defclust import (
    GoldAnnotation,
    build_matrix,
    build_dendrogram,
    energy_distance_vector,
    energy_matrix,
    run_sweep,
    synthetic_definitions,
    synthetic_gold,
    synthetic_tokenizer,
)


@pytest.fixture(scope="session")
def synthetic_docs():
    return synthetic_definitions()


@pytest.fixture(scope="session")
def synthetic_senses() -> GoldAnnotation:
    return synthetic_gold()


@pytest.fixture(scope="session")
def synthetic_matrix(synthetic_docs):
    return build_matrix(synthetic_docs, synthetic_tokenizer())


@pytest.fixture(scope="session")
def synthetic_distances(synthetic_matrix):
    return energy_distance_vector(energy_matrix(synthetic_matrix))


@pytest.fixture(scope="session")
def synthetic_tree(synthetic_distances):
    return build_dendrogram(synthetic_distances)


@pytest.fixture(scope="session")
def synthetic_sweep(synthetic_tree, synthetic_docs, synthetic_senses):
    return run_sweep(synthetic_tree, len(synthetic_docs), synthetic_senses)
