"""Beyond the rank-3 acceptance scope: the same construction and suite on
branched Dynkin diagrams and higher ranks."""

import os

import pytest

from qcluster.builders import build_disk_seed, build_triangle
from qcluster.rootdata import cartan_data, longest_word
from qcluster.uq import KappaContext, relation_suite


def run_suite(name, word=None):
    c = cartan_data(name)
    w = word or longest_word(c)
    rep = relation_suite(KappaContext(c, w, quotient=True))
    assert rep["ok"], [x for x in rep["cases"] if not x["ok"]]
    return len(rep["cases"])


def test_d4_suite_two_words():
    assert run_suite("D4") == 196
    assert run_suite("D4", (1, 2, 3, 4) * 3) == 196


def test_a4_suite():
    assert run_suite("A4") == 196


@pytest.mark.skipif(
    not os.environ.get("QCLUSTER_SLOW_TESTS"),
    reason="takes ~40s; set QCLUSTER_SLOW_TESTS=1",
)
def test_d5_suite():
    assert run_suite("D5") == 290


def test_e6_builder_counts():
    c = cartan_data("E6")
    w = longest_word(c)
    tri = build_triangle(c, w)
    assert len(tri.quiver) == c.n + 2 * c.rank == 48
    assert len(tri.quiver.frozen_ids()) == 3 * c.rank == 18
    disk = build_disk_seed(c, w)
    assert len(disk.quiver) == 2 * c.n + 2 * c.rank == 84
    assert len(disk.quiver.mutable_ids()) == 2 * c.n == 72
