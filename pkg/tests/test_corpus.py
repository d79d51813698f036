import pytest

from quiverdim.corpus import CORPUS, TAGS, Expectation, run_corpus


def test_corpus_size_and_names():
    names = [e.name for e in CORPUS]
    assert len(names) >= 10 and len(set(names)) == len(names)


@pytest.mark.parametrize("e", CORPUS, ids=lambda e: e.name)
def test_expectations_tagged(e):
    assert e.expectations
    assert all(x.tag in TAGS for x in e.expectations)
    assert e.parsed()


def test_unknown_tag_rejected():
    with pytest.raises(ValueError):
        Expectation("gldim", "1", "GUESS")


@pytest.mark.parametrize("e", CORPUS, ids=lambda e: e.name)
def test_corpus_expectations_hold(e):
    rows = run_corpus([e])
    bad = [r for r in rows if not r[-1]]
    assert not bad, bad
