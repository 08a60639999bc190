import albertine


def test_signature_table():
    table = albertine.signature_table()
    assert len(table) == 11
    for name, computed, expected in table:
        assert computed == expected, name
    assert ("split-27", 3, 3) in table


def test_census():
    count, witnesses = albertine.census("her")
    assert count == 3
    for w in witnesses:
        assert sum(1 for c in w if c) == 1
    count, witnesses = albertine.census("lambda")
    assert count == 0
    assert witnesses == []


def test_root_count():
    assert albertine.root_count(2) == 240
    assert albertine.root_count(1) == 0


def test_verify():
    ok, report = albertine.verify("comp:zorn")
    assert ok
    assert '"paper_ref"' in report
