import pytest

import hopfclass


def test_fuse_example():
    got = hopfclass.fuse("V(2,0)", "V(2,0)", family="hpq", n=3, p=1)
    assert got == {"V(3,0)": 1, "V(1,1)": 1}


def test_presentation_target_passes():
    doc = hopfclass.verify("thm3.8", family="tensor-taft", n=3)
    assert doc["schema_version"] == hopfclass.SCHEMA_VERSION
    assert doc["status"] == "pass"


def test_block_count_at_n4():
    doc = hopfclass.verify("blocks", family="hpq", n=4, p=1)
    assert doc["reports"][0]["data"]["block_count"] == 10


def test_closed_table_shape():
    t = hopfclass.table(family="hpq", n=3, p=1)
    assert len(t["basis"]) == 15
    assert len(t["entries"]) == 15 * 15


def test_usage_errors_raise():
    assert "thm5.9" in hopfclass.verify_targets()
    with pytest.raises(hopfclass.HopfclassError, match="unknown target"):
        hopfclass.verify("nonsense")
