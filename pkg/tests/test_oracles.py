import pytest

from chipfiring import SizeCapError, enumerate_recurrents
from chipfiring.families import bidirected_complete, directed_cycle, parallel_pair
from chipfiring.oracles import brute_acyclic_sets, brute_arborescences, brute_recurrents
from chipfiring.recurrent import recurrent_count
from chipfiring.tutte import max_acyclic_unique_sink_count

from support import corpus, small_corpus

C3 = directed_cycle(["s", "a", "b"])
K3 = bidirected_complete(["s", "a", "b"])
BANANA = parallel_pair("u", "v", 2)


def test_brute_arborescences_examples():
    assert brute_arborescences(C3, "s") == 1
    assert brute_arborescences(K3, "a") == 3
    assert brute_arborescences(BANANA, "u") == 2
    big = bidirected_complete(list("abcdefg"))
    with pytest.raises(SizeCapError):
        brute_arborescences(big, "a")


def test_brute_arborescences_match_determinant():
    for g in corpus()[:50]:
        for s in g.vertices:
            assert brute_arborescences(g, s) == recurrent_count(g, s)


def test_brute_acyclic_examples():
    assert brute_acyclic_sets(C3, "s") == 1
    assert brute_acyclic_sets(BANANA, "u") == 1
    assert brute_acyclic_sets(K3, "s") == 2


def test_brute_acyclic_matches_main_path():
    for g in corpus()[:30]:
        for s in g.vertices:
            assert brute_acyclic_sets(g, s) == max_acyclic_unique_sink_count(g, s)


def test_brute_recurrents_examples():
    assert [c.as_dict() for c in brute_recurrents(C3, "s")] == [{"a": 0, "b": 0}]
    assert len(brute_recurrents(K3, "s")) == 3
    assert len(brute_recurrents(BANANA, "u")) == 2
    big = bidirected_complete(list("abcde"))
    with pytest.raises(SizeCapError):
        brute_recurrents(big, "a")


def test_brute_recurrents_agree_with_burning_enumeration():
    for g in small_corpus()[:40]:
        for s in g.vertices:
            oracle = sorted(c.chips for c in brute_recurrents(g, s))
            main = sorted(c.chips for c in enumerate_recurrents(g, s).configs)
            assert oracle == main
